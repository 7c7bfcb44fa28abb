#include "k3cubic/kodaira.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3cubic::kodaira {

std::string to_string(FiberType t) {
  switch (t) {
    case FiberType::Smooth: return "smooth";
    case FiberType::II: return "II";
    case FiberType::IV: return "IV";
    case FiberType::I0star: return "I0*";
    case FiberType::IVstar: return "IV*";
    case FiberType::IIstar: return "II*";
  }
  return "?";
}

FiberType parse_fiber_type(const std::string& label) {
  for (auto t : {FiberType::Smooth, FiberType::II, FiberType::IV, FiberType::I0star, FiberType::IVstar, FiberType::IIstar})
    if (to_string(t) == label) return t;
  throw ParseError("unknown fibre type '" + label + "'");
}

int euler_number(FiberType t) {
  switch (t) {
    case FiberType::Smooth: return 0;
    case FiberType::II: return 2;
    case FiberType::IV: return 4;
    case FiberType::I0star: return 6;
    case FiberType::IVstar: return 8;
    case FiberType::IIstar: return 10;
  }
  return 0;
}

std::string root_lattice(FiberType t) {
  switch (t) {
    case FiberType::IV: return "A2";
    case FiberType::I0star: return "D4";
    case FiberType::IVstar: return "E6";
    case FiberType::IIstar: return "E8";
    default: return "";
  }
}

FiberType fiber_type_from_multiplicity(int k) {
  switch (k) {
    case 0: return FiberType::Smooth;
    case 1: return FiberType::II;
    case 2: return FiberType::IV;
    case 3: return FiberType::I0star;
    case 4: return FiberType::IVstar;
    case 5: return FiberType::IIstar;
    default: break;
  }
  if (k >= 6) throw DomainError("non-minimal Weierstrass model");
  throw DomainError("negative multiplicity");
}

BinaryForm weierstrass_sextic(const BinaryForm& f5, const BinaryForm& f2) {
  if (f5.degree() != 5 || f2.degree() != 2) throw DomainError("expected forms of degrees 5 and 2");
  return (f5 * f5 * f2).canonical();
}

FiberCounts FiberConfiguration::counts() const {
  FiberCounts c;
  for (const auto& f : fibers) c[f.type] += f.geometric_count();
  return c;
}

std::string to_string(const FiberCounts& counts) {
  std::ostringstream os;
  bool first = true;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    if (it->second == 0 || it->first == FiberType::Smooth) continue;
    if (!first) os << ", ";
    first = false;
    if (it->second != 1) os << it->second << " ";
    os << to_string(it->first);
  }
  return os.str();
}

FiberCounts parse_fiber_counts(const std::string& text) {
  FiberCounts counts;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::istringstream words(item);
    std::string a, b;
    words >> a;
    if (a.empty()) throw ParseError("empty fibre entry in '" + text + "'");
    int n = 1;
    if (words >> b) {
      try {
        n = std::stoi(a);
      } catch (const std::exception&) {
        throw ParseError("bad fibre count in '" + text + "'");
      }
      a = b;
    }
    counts[parse_fiber_type(a)] += n;
  }
  return counts;
}

FiberConfiguration fiber_configuration(const BinaryForm& f5, const BinaryForm& f2) {
  const auto pc = binforms::classify_case(f5, f2);
  FiberConfiguration config;
  for (const auto& cls : binforms::point_classes(f5, f2)) {
    const FiberType t = fiber_type_from_multiplicity(cls.weight());
    config.fibers.push_back({t, cls.locus});
    config.euler_total += euler_number(t) * cls.count();
  }
  std::stable_sort(config.fibers.begin(), config.fibers.end(),
                   [](const Fiber& a, const Fiber& b) { return a.type > b.type; });
  if (pc.case_id != binforms::CaseId::Cusp && config.counts() != table_fibers(pc.case_id))
    throw std::logic_error("fibre configuration disagrees with the table for case " + binforms::to_string(pc.case_id));
  return config;
}

lattices::LatticeExpr trivial_lattice(const FiberCounts& counts) {
  lattices::LatticeExpr expr;
  expr.components.push_back({"U", 1, 1});
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    const std::string r = root_lattice(it->first);
    if (r.empty() || it->second == 0) continue;
    expr.components.push_back({r, 1, it->second});
  }
  return expr;
}

FiberCounts table_fibers(binforms::CaseId id) {
  return parse_fiber_counts(binforms::table1_row(id).kodaira_fibres);
}

}  // namespace k3cubic::kodaira
