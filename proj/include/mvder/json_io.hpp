#ifndef MVDER_JSON_IO_HPP
#define MVDER_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "mvder/algebra.hpp"
#include "mvder/chang.hpp"
#include "mvder/derivations.hpp"
#include "mvder/structure.hpp"

namespace mvder {

inline nlohmann::json algebra_to_json(const FiniteMvAlgebra& a) {
  nlohmann::json oplus = nlohmann::json::array();
  for (int i = 0; i < a.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.n; ++j) row.push_back(a.oplus(i, j));
    oplus.push_back(std::move(row));
  }
  return {{"n", a.n}, {"oplus", std::move(oplus)}, {"neg", a.neg_table}, {"names", a.names}};
}

/// Reads the raw-table format; axioms are not validated here.
inline FiniteMvAlgebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("oplus") || !j.contains("neg")) {
    throw InvalidInput("algebra_from_json: expected object with n, oplus, neg");
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return from_tables(j.at("n").get<int>(), j.at("oplus").get<std::vector<std::vector<int>>>(),
                     j.at("neg").get<std::vector<int>>(), std::move(names));
}

inline nlohmann::json decomposition_to_json(const Decomposition& d) {
  return {{"chains", d.chain_lengths}, {"iso", d.iso}};
}

inline nlohmann::json derivation_to_json(const DerivationRecord& r) {
  nlohmann::json flags = {{"principal", r.is_principal},
                          {"witness", r.principal_witness ? nlohmann::json(*r.principal_witness)
                                                          : nlohmann::json(nullptr)},
                          {"isotone", r.is_isotone},
                          {"ider", r.in_ider},
                          {"chi", r.is_chi},
                          {"idempotent", r.is_idempotent}};
  return {{"images", r.op.images}, {"flags", std::move(flags)},
          {"fixed_points", r.fixed_points.elements()}};
}

inline nlohmann::json chang_report_to_json(const ChangWindowReport& r) {
  return {{"window", r.window},
          {"eq1_ok", r.eq1_ok},
          {"injective_on_window", r.injective_on_window},
          {"image_of_one", r.image_of_one}};
}

}  // namespace mvder

#endif  // MVDER_JSON_IO_HPP
