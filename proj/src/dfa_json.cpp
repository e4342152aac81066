#include "regmeasure/dfa_json.hpp"

namespace regmeasure {

namespace {

const nlohmann::json& field(const nlohmann::json& doc, const char* name) {
  if (!doc.contains(name)) throw DfaFormatError(std::string("missing field '") + name + "'");
  return doc.at(name);
}

std::size_t as_index(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw DfaFormatError(where + ": expected a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

Dfa dfa_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw DfaFormatError("dfa document must be a JSON object");

  const auto& alpha = field(doc, "alphabet");
  if (!alpha.is_array()) throw DfaFormatError("alphabet: expected an array");
  std::string symbols;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!alpha[i].is_string() || alpha[i].get<std::string>().size() != 1)
      throw DfaFormatError("alphabet[" + std::to_string(i) + "]: expected a one-character string");
    symbols += alpha[i].get<std::string>();
  }
  Alphabet alphabet = [&] {
    try {
      return Alphabet(symbols);
    } catch (const std::invalid_argument& e) {
      throw DfaFormatError(std::string("alphabet: ") + e.what());
    }
  }();
  const std::size_t k = alphabet.size();

  const std::size_t states = as_index(field(doc, "states"), "states");
  if (states == 0) throw DfaFormatError("states: must be positive");
  const std::size_t initial = as_index(field(doc, "initial"), "initial");
  if (initial >= states) throw DfaFormatError("initial: state out of range");

  std::vector<bool> accepting(states, false);
  const auto& acc = field(doc, "accepting");
  if (!acc.is_array()) throw DfaFormatError("accepting: expected an array");
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const std::size_t q = as_index(acc[i], "accepting[" + std::to_string(i) + "]");
    if (q >= states) throw DfaFormatError("accepting[" + std::to_string(i) + "]: state out of range");
    accepting[q] = true;
  }

  const auto& rows = field(doc, "delta");
  if (!rows.is_array() || rows.size() != states)
    throw DfaFormatError("delta: expected " + std::to_string(states) + " rows");
  const State sink = static_cast<State>(states);
  bool needs_sink = false;
  std::vector<State> delta;
  delta.reserve((states + 1) * k);
  for (std::size_t q = 0; q < states; ++q) {
    const auto& row = rows[q];
    const std::string where = "delta[" + std::to_string(q) + "]";
    if (!row.is_array() || row.size() != k)
      throw DfaFormatError(where + ": expected " + std::to_string(k) + " entries");
    for (std::size_t a = 0; a < k; ++a) {
      const auto& v = row[a];
      if (v.is_null() || (v.is_number_integer() && v.get<long long>() < 0)) {
        needs_sink = true;
        delta.push_back(sink);
        continue;
      }
      const std::size_t t = as_index(v, where + "[" + std::to_string(a) + "]");
      if (t >= states) throw DfaFormatError(where + "[" + std::to_string(a) + "]: state out of range");
      delta.push_back(static_cast<State>(t));
    }
  }
  std::size_t total = states;
  if (needs_sink) {
    ++total;
    accepting.push_back(false);
    delta.insert(delta.end(), k, sink);
  }
  return Dfa(std::move(alphabet), total, static_cast<State>(initial), std::move(accepting),
             std::move(delta));
}

Dfa dfa_from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DfaFormatError("json syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return dfa_from_json(doc);
}

nlohmann::json dfa_to_json(const Dfa& dfa) {
  nlohmann::json doc;
  doc["alphabet"] = nlohmann::json::array();
  for (char c : dfa.alphabet().symbols()) doc["alphabet"].push_back(std::string(1, c));
  doc["states"] = dfa.state_count();
  doc["initial"] = dfa.initial();
  doc["accepting"] = nlohmann::json::array();
  for (State q = 0; q < dfa.state_count(); ++q)
    if (dfa.is_accepting(q)) doc["accepting"].push_back(q);
  doc["delta"] = nlohmann::json::array();
  for (State q = 0; q < dfa.state_count(); ++q) {
    nlohmann::json row = nlohmann::json::array();
    for (Letter a = 0; a < dfa.alphabet().size(); ++a) row.push_back(dfa.next(q, a));
    doc["delta"].push_back(std::move(row));
  }
  return doc;
}

}  // namespace regmeasure
