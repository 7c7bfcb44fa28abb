#pragma once

#include <string>
#include <vector>

#include "k3cubic/binforms.hpp"
#include "k3cubic/fqf.hpp"

namespace k3cubic::lattices {

/// Row of the Picard lattice table: M(t) and its orthogonal complement T(t).
struct Table2Row {
  int row;
  std::string picard;          // M(t)
  std::string transcendental;  // T(t)
};

const std::vector<Table2Row>& table2();
/// 8* shares row 8 and 13* shares row 13.
int table2_row_index(binforms::CaseId id);
const Table2Row& table2_row(binforms::CaseId id);

struct ShiodaTateReport {
  Integer fiber_discriminant_product;  // d_1 ... d_k
  Integer picard_discriminant;         // |D(M(t))|
  Integer mw_order;                    // 0 when no integral solution exists
  bool holds = false;
};

/// Solves (#MW)^2 |D(M(t))| = d_1...d_k for the case's fibre configuration.
ShiodaTateReport shioda_tate_check(binforms::CaseId id);

struct Table2RowCheck {
  int row;
  std::size_t rank_m;
  std::size_t rank_t;
  Signature sig_m;
  Signature sig_t;
  Integer disc_m;  // |D(M)|
  Integer disc_t;  // |D(T)|
  bool rank_sum_ok;
  bool signature_ok;
  bool forms_ok;  // q_T isometric to -q_M
  std::string form_m;
  std::string form_t;
  bool pass() const { return rank_sum_ok && signature_ok && forms_ok && disc_m == disc_t; }
};

std::vector<Table2RowCheck> table2_verify();

}  // namespace k3cubic::lattices
