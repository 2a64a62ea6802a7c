#pragma once

#include "kostka/partition.hpp"
#include "kostka/qpoly.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace kostka::cli {

using Json = nlohmann::json;

/*
 * Output of one command.  JSON objects keep their keys sorted and big
 * integers are written as decimal strings, so dumping a parsed report
 * reproduces it byte for byte.
 *
 * JSON layout:
 *   {"command": str, "inputs": {...}, "results": {...},
 *    "checks": {name: bool}, "ok": bool, "timing": {"seconds": number}}
 */
struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::map<std::string, bool> checks;
    std::vector<std::string> messages;  // failure details, shown in text mode
    double seconds = 0;

    /* Adds a result under `key`, with a human-readable rendering. */
    void add(const std::string& key, Json value, std::string text);
    void check(const std::string& name, bool passed, const std::string& detail = {});
    bool ok() const;

    Json to_json() const;
    std::string to_text() const;

private:
    std::vector<std::pair<std::string, std::string>> text_;
};

/* [[exponent, "coefficient"], ...] in increasing exponent order. */
Json qpoly_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);
Json partition_json(const Partition& p);
Json coeffs_json(const std::vector<mpz_class>& c);

/* One entry per lambda, keyed by "a,b,c". */
Json decomposition_json(const std::map<Partition, QPoly>& d);
std::string decomposition_text(const std::map<Partition, QPoly>& d);

/* Canonical serialization: sorted keys, no whitespace. */
std::string canonical_dump(const Json& j);

}  // namespace kostka::cli
