#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "k3cubic/rational.hpp"

namespace k3cubic::f3 {

/// Vector of F_3^5 with entries in {0, 1, 2}.
using Vec = std::array<int, 5>;
/// Row-major 5x5 matrix over F_3.
using Mat = std::array<std::uint8_t, 25>;

int code(const Vec& x);  // base 3, first coordinate least significant
Vec from_code(int c);
Vec negate(const Vec& x);
Vec add(const Vec& x, const Vec& y);
/// Accepts entries like -1 and reduces mod 3.
Vec make_vec(std::initializer_list<int> entries);
std::string to_string(const Vec& x);

int weight(const Vec& x);
/// q(x) = -(4/3) weight(x) mod 2, in [0, 2).
Rational q(const Vec& x);
/// b(x, y) = (2/3) sum x_i y_i mod 1.
Rational b(const Vec& x, const Vec& y);
int dot(const Vec& x, const Vec& y);  // sum x_i y_i mod 3
inline bool orthogonal(const Vec& x, const Vec& y) { return dot(x, y) == 0; }

enum class NormClass { Zero, Isotropic, Short, Long };  // q = 0, -2/3, -4/3
NormClass norm_class(const Vec& x);
std::string to_string(NormClass c);

/// The lexicographically smaller of x and -x.
Vec canonical_class(const Vec& x);

struct NormCensus {
  int isotropic = 0;
  int short_classes = 0;
  int long_classes = 0;
};
/// Exhaustive count of nonzero classes up to sign, keyed by the value of q.
NormCensus norm_census();
std::vector<Vec> classes_of(NormClass c);

Mat identity();
Mat multiply(const Mat& a, const Mat& b);
Vec image(const Mat& a, const Vec& x);
int det(const Mat& a);  // in {0, 1, 2}
bool preserves_form(const Mat& a);  // a^T a = I
std::uint64_t code(const Mat& a);
/// Reflection in an anisotropic vector.
Mat reflection(const Vec& v);

/// Explicit element list, sorted by code.
class Group {
 public:
  explicit Group(std::vector<Mat> elements);
  std::size_t order() const { return elements_.size(); }
  const std::vector<Mat>& elements() const { return elements_; }
  bool contains(const Mat& m) const;

 private:
  std::vector<Mat> elements_;
  std::vector<std::uint64_t> codes_;
};

/// Closure of the generators under multiplication; throws past `bound`.
Group closure(const std::vector<Mat>& generators, std::size_t bound = 200000);

/// SO(V), generated by products s_{e1} s_v of reflections.
const Group& special_orthogonal();
/// O(V) = SO(V) x {+-I}.
const Group& orthogonal();
/// Signed permutation matrices of determinant 1.
const Group& wd5();

/// Unordered set of classes (canonical reps, sorted).
using Tuple = std::vector<Vec>;
Tuple canonical_tuple(std::vector<Vec> classes);
Tuple act(const Mat& g, const Tuple& t);
std::string to_string(const Tuple& t);

/// All sets of k mutually orthogonal short classes.
std::vector<Tuple> orthogonal_short_tuples(int k);

/// Set stabilizer of t in the group.
std::size_t stabilizer_order(const Group& g, const Tuple& t);
std::size_t orbit_size(const Group& g, const Tuple& t);

/// Standard k-tuple (1,1,1,1,1), (1,-1,0,0,0), (0,0,1,-1,0), (0,0,0,1,-1)... truncated.
Tuple standard_tuple(int k);

struct OrbitReport {
  Tuple representative;  // smallest tuple of the orbit
  std::size_t orbit_size;
  std::size_t stabilizer_order;
  std::size_t index_in_gk;
};

struct OrbitSummary {
  int k;
  std::size_t gk_order;      // stabilizer of a k-tuple in SO(V)
  std::size_t tuple_count;   // all orthogonal k-tuples
  bool so_transitive;        // SO(V) orbit of a tuple is everything
  std::vector<OrbitReport> orbits;
  std::size_t index_sum;
};

/// W(D5)-orbits on sets of k mutually orthogonal short classes (1 <= k <= 4).
OrbitSummary wd5_orbits_on_short(int k);
std::size_t gk_order(int k);
/// Orbit of W(D5) containing t within the summary for t.size().
const OrbitReport& orbit_of(const OrbitSummary& summary, const Tuple& t);

struct CuspReport {
  int classes = 0;
  bool so_transitive = false;
  bool weight_three = false;
  std::vector<std::size_t> wd5_orbit_sizes;
};
CuspReport cusp_report();

/// Whether SO(V) acts transitively on the classes of a norm type.
bool so_transitive_on(NormClass c);

}  // namespace k3cubic::f3
