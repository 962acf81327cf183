#include "resfold/frame.hpp"

#include "resfold/complex.hpp"

namespace resfold {

namespace {

ScalarMatrix constant_part(const PolyMatrix& m) {
  if (!m.is_constant()) throw Error("frame change of basis must be constant");
  std::vector<Scalar> origin(m.ring()->nvars(), 0);
  return evaluate(m, origin);
}

}  // namespace

bool HyperbolicFrame::valid() const {
  if (embed.rows() != 2 * n || embed.cols() != 2 * n) return false;
  if (form.rows() != 2 * n || form.cols() != 2 * n) return false;
  if (!embed.is_constant() || !constant_part(embed).inverse()) return false;
  return embed.transpose() * form * embed == hyperbolic_form(embed.ring(), n);
}

PolyMatrix HyperbolicFrame::to_frame(const PolyMatrix& v) const {
  auto inv = constant_part(embed).inverse();
  if (!inv) throw Error("frame change of basis is singular");
  PolyMatrix e(embed.ring(), 2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) e.at(i, j) = Poly::constant(embed.ring(), inv->at(i, j));
  return e * v;
}

}  // namespace resfold
