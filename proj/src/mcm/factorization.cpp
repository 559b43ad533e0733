#include "gliaison/mcm/factorization.hpp"

#include <bit>
#include <unordered_map>

#include "gliaison/errors.hpp"

namespace gliaison {

Polynomial determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return m.ring()->one();
  if (n > 20) throw UsageError("determinant too large for Laplace expansion");
  // det of the bottom rows restricted to the columns in `mask`
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> Polynomial {
    std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    if (row == n) return m.ring()->one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Polynomial acc = m.ring()->zero();
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask >> j & 1u)) continue;
      if (!m(row, j).is_zero()) {
        Polynomial t = m(row, j) * self(self, mask & ~(1u << j));
        acc = sign > 0 ? acc + t : acc - t;
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (n == 32 ? 0u : (1u << n)) - 1u);
}

namespace {

Check product_check(const std::string& name, const Matrix& prod, const Polynomial& f) {
  Check c{name, true, ""};
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j) {
      Polynomial want = i == j ? f : prod.ring()->zero();
      if (prod(i, j) != want) {
        c.passed = false;
        c.detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " + prod(i, j).to_string() +
                   ", expected " + want.to_string();
        return c;
      }
    }
  return c;
}

void check_variable(const Polynomial& x) {
  if (x.size() != 1 || x.degree() != 1 || x.leading_term().coeff != 1)
    throw UsageError("Knoerrer step needs a variable, got " + x.to_string());
}

bool uses_variable(const Polynomial& p, const Monomial& x) {
  for (auto& t : p.terms())
    if (!t.mono.coprime(x)) return true;
  return false;
}

bool uses_variable(const MatrixFactorization& mf, const Monomial& x) {
  if (uses_variable(mf.f, x)) return true;
  for (const Matrix* m : {&mf.phi.matrix(), &mf.psi.matrix()})
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j)
        if (uses_variable((*m)(i, j), x)) return true;
  return false;
}

Matrix block2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  return a.hconcat(b).vconcat(c.hconcat(d));
}

MatrixFactorization tower_step(const MatrixFactorization& mf, const Polynomial& x, const Polynomial& y) {
  if (mf.f.degree() != 2) throw UsageError("Knoerrer steps are implemented for quadrics");
  check_variable(x);
  check_variable(y);
  for (const Polynomial* v : {&x, &y})
    if (uses_variable(mf, v->leading_term().mono))
      throw UsageError("variable " + v->to_string() + " already occurs in the factorization");
  const RingPtr& P = mf.f.ring();
  const std::size_t m = mf.phi.matrix().rows();
  Matrix X = Matrix::scalar(P, m, x), Y = Matrix::scalar(P, m, y);
  Matrix phi = block2(X, mf.phi.matrix(), mf.psi.matrix(), -Y);
  Matrix psi = block2(Y, mf.phi.matrix(), mf.psi.matrix(), -X);
  const Degrees& a = mf.phi.target();
  const Degrees& b = mf.phi.source();
  Degrees tgt = concat(a, shifted(b, -1));
  Degrees src = concat(shifted(a, 1), b);
  Ring ring = mf.phi.ring();
  MatrixFactorization out{mf.f + x * y, GradedMap(ring, tgt, src, phi), GradedMap(ring, src, shifted(tgt, 2), psi),
                          0};
  out.rank = mf_verify(out).rank;
  return out;
}

}  // namespace

MfReport mf_verify(const MatrixFactorization& mf) {
  MfReport r;
  const Matrix& phi = mf.phi.matrix();
  const Matrix& psi = mf.psi.matrix();
  Check shape{"square and matching", phi.rows() == phi.cols() && psi.rows() == psi.cols() && phi.rows() == psi.rows(),
              ""};
  if (!shape.passed) shape.detail = "phi and psi must be square of equal size";
  r.checks.push_back(shape);
  if (!shape.passed) return r;
  r.checks.push_back(product_check("phi*psi = f*id", phi * psi, mf.f));
  r.checks.push_back(product_check("psi*phi = f*id", psi * phi, mf.f));
  Polynomial det = determinant(phi);
  Check dc{"det phi = unit*f^r", false, ""};
  if (!det.is_zero() && mf.f.degree() > 0 && det.degree() % mf.f.degree() == 0) {
    int e = det.degree() / mf.f.degree();
    Polynomial fe = mf.f.pow(static_cast<unsigned>(e));
    if (det.monic() == fe.monic()) {
      dc.passed = true;
      r.rank = e;
      dc.detail = "r = " + std::to_string(e);
    }
  }
  if (!dc.passed) {
    // reducible f: the rank may differ between components, only the product is a power of f
    Polynomial both = det * determinant(psi);
    if (!both.is_zero() && both.monic() == mf.f.pow(static_cast<unsigned>(phi.rows())).monic()) {
      dc = Check{"det phi * det psi = unit*f^n", true, "det phi = " + det.to_string() + " is not a power of f"};
    } else {
      dc.detail = "det phi = " + det.to_string();
    }
  }
  r.checks.push_back(dc);
  if (mf.rank > 0 && r.rank >= 0 && mf.rank != r.rank) {
    r.checks.push_back({"declared rank", false,
                        "declared " + std::to_string(mf.rank) + ", determinant gives " + std::to_string(r.rank)});
  }
  r.valid = true;
  for (auto& c : r.checks) r.valid = r.valid && c.passed;
  return r;
}

MatrixFactorization mf_complete(const GradedMap& phi_in, const Polynomial& f) {
  Ring P = phi_in.ring().without_modulus();
  GradedMap phi(P, phi_in.target(), phi_in.source(), phi_in.matrix());
  const std::size_t n = phi.target().size();
  if (phi.source().size() != n) throw UsageError("mf_complete needs a square matrix");
  const int d = f.degree();
  Lifter lifter(P, phi.target(), phi.source(), phi.matrix().columns());
  std::vector<Column> cols;
  for (std::size_t j = 0; j < n; ++j) {
    Column v(n, P.poly().zero());
    v[j] = f;
    auto c = lifter.lift(v);
    if (!c) throw DomainError("f does not annihilate coker phi (column " + std::to_string(j) + ")");
    cols.push_back(*c);
  }
  GradedMap psi(P, phi.source(), shifted(phi.target(), d), Matrix::from_columns(P.ambient(), n, cols));
  MatrixFactorization mf{f, phi, psi, 0};
  mf.rank = mf_verify(mf).rank;
  return mf;
}

MatrixFactorization knoerrer_double_cover(const MatrixFactorization& mf, const Polynomial& x) {
  return tower_step(mf, x, x);
}

MatrixFactorization knoerrer_xy(const MatrixFactorization& mf, const Polynomial& x, const Polynomial& y) {
  if (x == y) throw UsageError("knoerrer_xy needs two distinct variables; use knoerrer_double_cover");
  return tower_step(mf, x, y);
}

}  // namespace gliaison
