#ifndef ZKPCP_RM_LOCATOR_H_
#define ZKPCP_RM_LOCATOR_H_

#include <span>
#include <vector>

#include "zkpcp/locator.h"
#include "zkpcp/rm.h"

namespace zkpcp {

// Whether I u S is constrained for RM, decided through the zero code on S.
// Requires |S_i| <= d_i + 1.
bool check_constraints(const CodeView& view, std::span<const Point> points,
                       const ProductSet& s);

// Points of I sitting at free columns of the reduced detector for I.
std::vector<Point> interpolating_set(const CodeView& view,
                                     std::span<const Point> points);

// Locator for a uniformly random extension of degree dv of a message on A.
// Requires d_i >= 2(|A_i| - 1) and every query of length m.
LocatorOutput rm_locate(const CodeView& view, const ProductSet& a,
                        std::span<const Point> points);

class RmLocator final : public Locator {
 public:
  RmLocator(CodeView view, ProductSet a);
  LocatorOutput locate(std::span<const Point> queries) const override;
  std::string message_domain() const override { return "cube"; }
  std::string output_domain() const override { return "rm"; }

 private:
  CodeView view_;
  ProductSet a_;
};

}  // namespace zkpcp

#endif  // ZKPCP_RM_LOCATOR_H_
