#include "coxspec/coxmaps.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace coxspec {

namespace {

bool is_rank3_standard(const CoxeterDatum& d) {
  return d.rank() == 3 && d.orders(0, 1) == 2 && d.orders(0, 2) == 3;
}

}  // namespace

Matrix rank3_gram_inverse(double eta) {
  const double rho = 3.0 - eta * eta;
  Matrix inv(3, 3);
  inv << 1.0 + rho, eta, 2.0,
         eta, 3.0, 2.0 * eta,
         2.0, 2.0 * eta, 4.0;
  return inv / rho;
}

FundamentalDomain fundamental_vectors(const ReflectionGroup& group) {
  FundamentalDomain d;
  d.roots = group.roots();
  d.reflections = group.generators();
  d.gram = d.roots.transpose() * d.roots;
  d.volume = det(d.roots);
  if (d.volume <= 0) throw DomainError("fundamental_vectors: det(n_1, ..., n_k) must be positive");

  const int k = d.rank();
  d.vectors.resize(k, k);
  for (int j = 0; j < k; ++j) {
    Matrix others(k, k - 1);
    for (int i = 0, c = 0; i < k; ++i)
      if (i != j) others.col(c++) = d.roots.col(i);
    const double sign = ((k - 1 - j) % 2 == 0) ? 1.0 : -1.0;
    d.vectors.col(j) = sign * cross_product(others);
  }

  const auto& datum = group.datum();
  if (is_rank3_standard(datum)) {
    d.gram_inverse = rank3_gram_inverse(2.0 * std::cos(std::numbers::pi / datum.orders(1, 2)));
  } else {
    d.gram_inverse = d.gram.ldlt().solve(Matrix::Identity(k, k));
  }
  return d;
}

FundamentalPoint fundamental_point(const FundamentalDomain& domain, const Vector& alpha) {
  if (alpha.size() != domain.rank()) throw DimensionError("fundamental_point: wrong coefficient count");
  if (!alpha.allFinite() || (alpha.array() <= 0.0).any())
    throw DomainError("fundamental_point: coefficients must be strictly positive");
  Vector p = domain.vectors * alpha;
  const double scale = p.norm();
  return {alpha / scale, p / scale};
}

PsiValues psi_maps(const FundamentalDomain& domain, const FundamentalPoint& point) {
  const Vector& alpha = point.alpha;
  if (alpha.size() != domain.rank() || (alpha.array() <= 0.0).any())
    throw DomainError("psi_maps: coefficients must be strictly positive");

  const double v = domain.volume;
  const Vector xp = v * (domain.gram_inverse * alpha).cwiseQuotient(alpha);
  const double total = xp.sum();
  const double lambda = (total - 2.0 * v) / total;
  PsiValues out{SimplexPoint(xp / total), lambda, 0.0};

  Vector rhs = Vector::Zero(point.point.size());
  for (int j = 0; j < domain.rank(); ++j) rhs += out.weights[j] * (domain.reflections[j] * point.point);
  out.relation_residual = (lambda * point.point - rhs).norm();
  if (out.relation_residual > 1e-10) {
    std::ostringstream os;
    os << "psi_maps: eigen-relation residual " << out.relation_residual << " exceeds 1e-10";
    throw InvarianceError(os.str());
  }
  return out;
}

namespace {

Matrix pf_matrix(const FundamentalDomain& domain, const SimplexPoint& x) {
  if (x.size() != domain.rank()) throw DimensionError("simplex point does not match group rank");
  if (!x.interior()) throw DomainError("Perron-Frobenius preimage needs an interior simplex point");
  return domain.volume * x.weights().cwiseInverse().asDiagonal() * domain.gram_inverse;
}

}  // namespace

FundamentalPoint psi_delta_inverse(const FundamentalDomain& domain, const SimplexPoint& x) {
  const auto pf = perron_frobenius(pf_matrix(domain, x));
  return fundamental_point(domain, pf.eigenvector);
}

double psi_lambda(const FundamentalDomain& domain, const SimplexPoint& x) {
  const auto pf = perron_frobenius(pf_matrix(domain, x));
  return 1.0 - 2.0 * domain.volume / pf.eigenvalue;
}

Vector edge_lengths_closed_form(const FundamentalDomain& domain, const FundamentalPoint& point) {
  return 2.0 * domain.volume * point.alpha;
}

Matrix orbit(const ReflectionGroup& group, const Vector& point) {
  Matrix rows(group.order(), point.size());
  for (int g = 0; g < group.order(); ++g) rows.row(g) = (group.element(g) * point).transpose();
  return rows;
}

}  // namespace coxspec
