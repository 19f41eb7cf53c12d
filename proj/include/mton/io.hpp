#pragma once

#include <ostream>
#include <string>

#include "json.hpp"
#include "mton/error.hpp"
#include "mton/partition.hpp"
#include "mton/polynomial.hpp"
#include "mton/tree.hpp"

namespace mton {

using Json = nlohmann::ordered_json;  // keeps "n" ahead of the blocks

namespace detail {

template <typename F>
auto parse_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace detail

inline Json to_json(const NcPartition& p) {
  Json blocks = Json::array();
  for (const Block& b : p.blocks()) blocks.push_back(b);
  return {{"n", p.size()}, {"blocks", blocks}};
}

inline NcPartition nc_partition_from_json(const Json& j) {
  return detail::parse_guard([&] {
    return validate_noncrossing(j.at("blocks").get<std::vector<Block>>(), j.at("n").get<int>());
  });
}

inline Json to_json(const OrderedNcPartition& op) {
  return {{"n", op.size()}, {"blocks_by_label", op.blocks_by_label()}};
}

inline OrderedNcPartition ordered_from_json(const Json& j) {
  return detail::parse_guard([&] {
    return OrderedNcPartition::from_blocks_by_label(j.at("blocks_by_label").get<std::vector<Block>>(),
                                                    j.at("n").get<int>());
  });
}

inline Json to_json(const TreeCode& c) {
  return {{"kind", std::string(to_string(c.kind))}, {"digits", c.digits}};
}

inline TreeCode tree_code_from_json(const Json& j) {
  return detail::parse_guard([&] {
    TreeCode c;
    c.kind = parse_kind(j.at("kind").get<std::string>());
    c.digits = j.at("digits").get<std::vector<int>>();
    c.n = static_cast<int>(c.digits.size()) + 1;
    return c;
  });
}

/// {"coeffs": {"0": "7", "1": "5"}} with exponents as keys and exact values as strings.
inline Json to_json(const ExactPolynomial& p) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = c.get_str();
  return {{"coeffs", coeffs}};
}

inline ExactPolynomial polynomial_from_json(const Json& j) {
  return detail::parse_guard([&] {
    ExactPolynomial p;
    for (const auto& [key, value] : j.at("coeffs").items()) {
      p.add_term(std::stoi(key), parse_rational(value.get<std::string>()));
    }
    return p;
  });
}

inline std::ostream& operator<<(std::ostream& os, const NcPartition& p) { return os << to_json(p).dump(); }
inline std::ostream& operator<<(std::ostream& os, const OrderedNcPartition& p) {
  return os << to_json(p).dump();
}
inline std::ostream& operator<<(std::ostream& os, const TreeCode& c) { return os << to_json(c).dump(); }
inline std::ostream& operator<<(std::ostream& os, const ExactPolynomial& p) { return os << p.str(); }

}  // namespace mton
