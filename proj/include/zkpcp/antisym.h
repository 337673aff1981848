#ifndef ZKPCP_ANTISYM_H_
#define ZKPCP_ANTISYM_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "zkpcp/locator.h"
#include "zkpcp/point.h"

namespace zkpcp {

// A prefix a of the cube stands for its suffix cube a x A_{|a|+1} x ... x A_m.
// The reverse set of a of length l is A_1 x ... x A_{m-l} x (a_l, ..., a_1).

// Number of cube points extending a.
std::uint64_t cube_size(const Point& a, const ProductSet& cube);
// |a intersect rev(b)|. Requires a symmetric cube.
std::uint64_t rev_intersection_size(const Point& a, const Point& b,
                                    const ProductSet& cube);
bool is_cube_prefix(const Point& a, const ProductSet& cube);
// Cube points extending a, lexicographic order.
std::vector<Point> expand_prefix(const Point& a, const ProductSet& cube);

struct PrefixFreeFamily {
  PointSet g;
  // For each input prefix, the elements of g partitioning its suffix cube.
  std::map<Point, PointSet> lambda;
};

// Splits the suffix cubes of I into a prefix-free family with |G| <= m|I|.
// Ties are broken towards the smallest point in (length, lex) order.
PrefixFreeFamily prefix_free(const PointSet& points, const ProductSet& cube);

// Connected components of the reverse-overlap graph on G whose union equals
// the union of their reverse sets. Sizes are compared arithmetically.
std::vector<std::vector<Point>> sym_sets(const PointSet& g,
                                         const ProductSet& cube);
bool is_symmetric_family(std::span<const Point> h, const ProductSet& cube);

// Locator for Enc(F) = Sigma[F|_A + W] with W uniform over
// {f - f o rev}. Messages live on the cube plus the root, where the root
// holds the total sum. Requires a symmetric cube.
LocatorOutput antisym_locate(const PrimeField& f, const ProductSet& cube,
                             std::span<const Point> points);

// Internal sizes of the last antisym_locate call on the same inputs, for
// locality checks.
struct AntisymStats {
  std::size_t g_size = 0;
  std::size_t sym_set_count = 0;
  std::size_t r_size = 0;
};
AntisymStats antisym_stats(const ProductSet& cube, std::span<const Point> points);

class AntisymLocator final : public Locator {
 public:
  AntisymLocator(PrimeField f, ProductSet cube);
  LocatorOutput locate(std::span<const Point> queries) const override;
  std::string message_domain() const override { return "cube+root"; }
  std::string output_domain() const override { return "cube-prefixes"; }

 private:
  PrimeField f_;
  ProductSet cube_;
};

}  // namespace zkpcp

#endif  // ZKPCP_ANTISYM_H_
