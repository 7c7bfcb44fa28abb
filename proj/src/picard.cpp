#include "k3cubic/picard.hpp"

#include <stdexcept>

#include "k3cubic/kodaira.hpp"

namespace k3cubic::lattices {

const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> rows = {
      {1, "U+A2^5", "A2(-1)+A2^4"},
      {2, "U+D4+A2^4", "A2(-2)+A2^3"},
      {3, "U+D4^2+A2^3", "A2(-1)+A2(2)^2"},
      {4, "U+E6+A2^3", "A2(-1)+A2^3"},
      {5, "U+E6+A2^3", "A2(-1)+A2^3"},
      {6, "U+D4+E6+A2^2", "A2(-2)+A2^2"},
      {7, "U+D4^2+E6+A2", "A2(-2)+A2(2)"},
      {8, "U+E6^2+A2", "A2(-1)+A2^2"},
      {9, "U+E6^2+A2", "A2(-1)+A2^2"},
      {10, "U+E8+A2^3", "A2(-1)+A2^2"},
      {11, "U+E6^2+D4", "A2(-2)+A2"},
      {12, "U+E8+D4+A2^2", "A2(-2)+A2"},
      {13, "U+E8+E6+A2", "A2(-1)+A2"},
      {14, "U+E8+E6+A2", "A2(-1)+A2"},
      {15, "U+E8+E6+D4", "A2(-2)"},
      {16, "U+E8^2+A2", "A2(-1)"},
      {17, "U+E8^2+A2", "A2(-1)"},
  };
  return rows;
}

int table2_row_index(binforms::CaseId id) {
  using binforms::CaseId;
  switch (id) {
    case CaseId::C8Star: return 8;
    case CaseId::C13Star: return 13;
    case CaseId::Cusp: throw DomainError("the cusp configuration has no Picard lattice row");
    default: break;
  }
  // enum order interleaves the starred cases after 8 and 13
  int index = static_cast<int>(id) + 1;
  if (id > CaseId::C8Star) --index;
  if (id > CaseId::C13Star) --index;
  return index;
}

const Table2Row& table2_row(binforms::CaseId id) { return table2().at(table2_row_index(id) - 1); }

ShiodaTateReport shioda_tate_check(binforms::CaseId id) {
  ShiodaTateReport r;
  const auto counts = kodaira::table_fibers(id);
  r.fiber_discriminant_product = 1;
  for (const auto& [type, n] : counts) {
    const std::string name = kodaira::root_lattice(type);
    if (name.empty()) continue;
    const Integer d = abs(named_lattice(name).determinant());
    for (int i = 0; i < n; ++i) r.fiber_discriminant_product *= d;
  }
  r.picard_discriminant = abs(parse_lattice_expr(table2_row(id).picard).build().determinant());
  r.mw_order = 0;
  if (r.fiber_discriminant_product % r.picard_discriminant == 0) {
    const Integer sq = r.fiber_discriminant_product / r.picard_discriminant;
    if (mpz_perfect_square_p(sq.get_mpz_t())) r.mw_order = sqrt(sq);
  }
  r.holds = r.mw_order > 0 && r.mw_order * r.mw_order * r.picard_discriminant == r.fiber_discriminant_product;
  return r;
}

std::vector<Table2RowCheck> table2_verify() {
  std::vector<Table2RowCheck> out;
  for (const auto& row : table2()) {
    const IntegralLattice m = parse_lattice_expr(row.picard).build();
    const IntegralLattice t = parse_lattice_expr(row.transcendental).build();
    Table2RowCheck c{};
    c.row = row.row;
    c.rank_m = m.rank();
    c.rank_t = t.rank();
    c.sig_m = signature(m);
    c.sig_t = signature(t);
    c.disc_m = abs(m.determinant());
    c.disc_t = abs(t.determinant());
    c.rank_sum_ok = c.rank_m + c.rank_t == 22;
    c.signature_ok = c.sig_m == Signature{1, static_cast<int>(c.rank_m) - 1, 0} &&
                     c.sig_t == Signature{2, static_cast<int>(c.rank_t) - 2, 0};
    const auto qm = discriminant_form(m);
    const auto qt = discriminant_form(t);
    c.form_m = describe(qm);
    c.form_t = describe(qt);
    c.forms_ok = fqf_isometric(qt, negated(qm));
    out.push_back(c);
  }
  return out;
}

}  // namespace k3cubic::lattices
