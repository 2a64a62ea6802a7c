#include "kostka/cli/report.hpp"

#include <iomanip>
#include <sstream>

namespace kostka::cli {

void Report::add(const std::string& key, Json value, std::string text)
{
    results[key] = std::move(value);
    text_.emplace_back(key, std::move(text));
}

void Report::check(const std::string& name, bool passed, const std::string& detail)
{
    checks[name] = passed;
    if (!passed && !detail.empty())
        messages.push_back(name + ": " + detail);
}

bool Report::ok() const
{
    for (const auto& [name, passed] : checks)
        if (!passed)
            return false;
    return true;
}

Json Report::to_json() const
{
    Json j = Json::object();
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["checks"] = Json::object();
    for (const auto& [name, passed] : checks)
        j["checks"][name] = passed;
    j["ok"] = ok();
    j["timing"] = {{"seconds", seconds}};
    return j;
}

std::string Report::to_text() const
{
    std::ostringstream os;
    os << command;
    for (const auto& [k, v] : inputs.items())
        os << "  " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    os << "\n";
    for (const auto& [key, text] : text_) {
        if (text.find('\n') == std::string::npos)
            os << key << ": " << text << "\n";
        else
            os << key << ":\n" << text;
    }
    if (!checks.empty()) {
        os << "checks:\n";
        for (const auto& [name, passed] : checks)
            os << "  " << std::left << std::setw(28) << name << (passed ? "pass" : "FAIL") << "\n";
    }
    for (const auto& m : messages)
        os << "  ! " << m << "\n";
    os << "time: " << std::fixed << std::setprecision(3) << seconds << "s\n";
    return os.str();
}

Json qpoly_json(const QPoly& p)
{
    Json a = Json::array();
    for (const auto& [e, c] : p.terms())
        a.push_back(Json::array({e, c.get_str()}));
    return a;
}

QPoly qpoly_from_json(const Json& j)
{
    QPoly p;
    for (const auto& term : j)
        p.add_term(term.at(0).get<QPoly::Exponent>(), mpz_class(term.at(1).get<std::string>()));
    return p;
}

Json partition_json(const Partition& p)
{
    return Json(p.parts());
}

Json coeffs_json(const std::vector<mpz_class>& c)
{
    Json a = Json::array();
    for (const auto& x : c)
        a.push_back(x.get_str());
    return a;
}

namespace {

std::string key_of(const Partition& p)
{
    std::string s;
    for (int x : p.parts())
        s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

}  // namespace

Json decomposition_json(const std::map<Partition, QPoly>& d)
{
    Json j = Json::object();
    for (const auto& [lambda, p] : d)
        if (!p.is_zero())
            j[key_of(lambda)] = qpoly_json(p);
    return j;
}

std::string decomposition_text(const std::map<Partition, QPoly>& d)
{
    std::ostringstream os;
    // dominance-largest first
    for (auto it = d.rbegin(); it != d.rend(); ++it)
        if (!it->second.is_zero())
            os << "  " << std::left << std::setw(14) << it->first.to_string() << it->second.to_string() << "\n";
    return os.str();
}

std::string canonical_dump(const Json& j)
{
    return j.dump();
}

}  // namespace kostka::cli
