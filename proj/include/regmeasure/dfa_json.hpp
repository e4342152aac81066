// DFA interchange format:
//   {"alphabet": ["a","b"], "states": 2, "initial": 0, "accepting": [0],
//    "delta": [[1,1],[0,0]]}
// delta[q][i] is the target of state q on the i-th alphabet symbol. A null or
// negative entry marks a missing transition; missing transitions are routed
// to a fresh rejecting sink so the result is total.

#ifndef REGMEASURE_DFA_JSON_HPP
#define REGMEASURE_DFA_JSON_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "regmeasure/automata.hpp"

namespace regmeasure {

/// Malformed DFA document. what() names the offending field.
class DfaFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Dfa dfa_from_json(const nlohmann::json& doc);
/// Parses text; syntax errors carry the byte offset reported by the JSON parser.
Dfa dfa_from_json_text(const std::string& text);
nlohmann::json dfa_to_json(const Dfa& dfa);

}  // namespace regmeasure

#endif  // REGMEASURE_DFA_JSON_HPP
