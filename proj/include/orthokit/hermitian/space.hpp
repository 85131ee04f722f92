#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orthokit/error.hpp"
#include "orthokit/hermitian/matrix.hpp"
#include "orthokit/hermitian/scalar.hpp"

namespace orthokit {

// Fⁿ with the form ⟨u,v⟩ = Σ u_i G_ij v_j*, linear in the first slot.
template <class S>
class HermitianSpace {
 public:
  using scalar_type = S;

  HermitianSpace() = default;
  explicit HermitianSpace(Matrix<S> gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw invalid_input("Gram matrix is not square");
    if (!(gram_.conj_transpose() == gram_)) throw invalid_input("Gram matrix is not Hermitian");
    for (std::size_t k = 1; k <= gram_.rows(); ++k) {
      const S m = determinant(gram_.block(0, 0, k, k));
      if (!is_real(m) || real_part(m) <= 0)
        throw invalid_input("Gram matrix is not positive definite (leading minor " + std::to_string(k) + ")");
    }
  }

  static HermitianSpace standard(std::size_t n) { return HermitianSpace(Matrix<S>::identity(n)); }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix<S>& gram() const { return gram_; }

  friend bool operator==(const HermitianSpace&, const HermitianSpace&) = default;

 private:
  Matrix<S> gram_;
};

template <class S>
S inner(const HermitianSpace<S>& H, const Vec<S>& u, const Vec<S>& v) {
  if (u.size() != H.dim() || v.size() != H.dim()) throw invalid_input("vector length does not match the space");
  S out(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < v.size(); ++j) out += S(u[i] * H.gram()(i, j) * conj(v[j]));
  }
  return out;
}

// A subspace of Fⁿ held as its reduced row-echelon basis, so equality is
// matrix equality.
template <class S>
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vec<S>>& vectors) {
    Subspace s(ambient);
    if (vectors.empty()) return s;
    Matrix<S> m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient) throw invalid_input("spanning vector has the wrong length");
      for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
    }
    const auto e = rref(m);
    s.basis_ = e.reduced.block(0, 0, e.pivots.size(), ambient);
    return s;
  }
  static Subspace whole(std::size_t ambient) {
    std::vector<Vec<S>> e;
    for (std::size_t i = 0; i < ambient; ++i) {
      Vec<S> v(ambient, S(0));
      v[i] = S(1);
      e.push_back(v);
    }
    return span(ambient, e);
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<S>& basis() const { return basis_; }
  std::vector<Vec<S>> vectors() const {
    std::vector<Vec<S>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  bool contains(const Vec<S>& v) const {
    auto vs = vectors();
    vs.push_back(v);
    return span(ambient_, vs).dim() == dim();
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  Matrix<S> basis_;
};

template <class S>
Subspace<S> sum(const Subspace<S>& a, const Subspace<S>& b) {
  auto vs = a.vectors();
  for (auto& v : b.vectors()) vs.push_back(v);
  return Subspace<S>::span(a.ambient(), vs);
}

// dim(a ∩ b) = dim a + dim b - dim(a + b)
template <class S>
std::size_t intersection_dim(const Subspace<S>& a, const Subspace<S>& b) {
  return a.dim() + b.dim() - sum(a, b).dim();
}

// v ⊥ S iff B G v* = 0 for the basis rows B, so v* ranges over null(B G).
template <class S>
Subspace<S> orthocomplement_sub(const HermitianSpace<S>& H, const Subspace<S>& s) {
  if (s.ambient() != H.dim()) throw invalid_input("subspace lives in a different space");
  if (s.dim() == 0) return Subspace<S>::whole(H.dim());
  std::vector<Vec<S>> out;
  for (auto& w : nullspace(s.basis() * H.gram())) {
    for (auto& x : w) x = conj(x);
    out.push_back(w);
  }
  return Subspace<S>::span(H.dim(), out);
}

template <class S>
struct SplitReport {
  bool splitting = true;
  std::size_t dim = 0;
  std::size_t complement_dim = 0;
  std::size_t intersection_dim = 0;
};

template <class S>
SplitReport<S> split(const HermitianSpace<S>& H, const Subspace<S>& s) {
  const auto c = orthocomplement_sub(H, s);
  SplitReport<S> r;
  r.dim = s.dim();
  r.complement_dim = c.dim();
  r.intersection_dim = intersection_dim(s, c);
  r.splitting = sum(s, c).dim() == H.dim() && r.intersection_dim == 0;
  return r;
}

template <class S>
bool is_splitting(const HermitianSpace<S>& H, const Subspace<S>& s) {
  return split(H, s).splitting;
}

struct OrthomodularReport {
  bool holds = true;
  std::size_t checked = 0;
  std::string witness;
};

template <class S>
OrthomodularReport verify_orthomodular(const HermitianSpace<S>& H, const std::vector<Subspace<S>>& sample) {
  OrthomodularReport r;
  for (const auto& s : sample) {
    ++r.checked;
    const auto c = orthocomplement_sub(H, s);
    const bool ok = is_splitting(H, s) && orthocomplement_sub(H, c) == s;
    if (!ok && r.holds) {
      r.holds = false;
      r.witness = "subspace " + to_string(s.basis()) + " does not split";
    }
  }
  return r;
}

// A linear map dom → cod acting on column vectors; matrix is cod.dim × dom.dim.
template <class S>
class LinearMap {
 public:
  LinearMap(HermitianSpace<S> dom, HermitianSpace<S> cod, Matrix<S> m)
      : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(m)) {
    if (m_.rows() != cod_.dim() || m_.cols() != dom_.dim()) throw invalid_input("map matrix has the wrong shape");
  }

  static LinearMap identity(const HermitianSpace<S>& H) { return LinearMap(H, H, Matrix<S>::identity(H.dim())); }
  static LinearMap zero(const HermitianSpace<S>& a, const HermitianSpace<S>& b) {
    return LinearMap(a, b, Matrix<S>(b.dim(), a.dim()));
  }

  const HermitianSpace<S>& dom() const { return dom_; }
  const HermitianSpace<S>& cod() const { return cod_; }
  const Matrix<S>& matrix() const { return m_; }
  Vec<S> operator()(const Vec<S>& v) const { return m_ * v; }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  HermitianSpace<S> dom_;
  HermitianSpace<S> cod_;
  Matrix<S> m_;
};

// ψ ∘ φ
template <class S>
LinearMap<S> compose(const LinearMap<S>& psi, const LinearMap<S>& phi) {
  if (!(phi.cod() == psi.dom())) throw invalid_input("linear maps are not composable");
  return LinearMap<S>(phi.dom(), psi.cod(), psi.matrix() * phi.matrix());
}

// ⟨φu, v⟩ = ⟨u, φ*v⟩ for basis vectors reads G₁ conj(N) = Mᵀ G₂, which is
// solved for conj(N) directly.
template <class S>
LinearMap<S> linear_adjoint(const LinearMap<S>& phi) {
  const auto& G1 = phi.dom().gram();
  const auto& G2 = phi.cod().gram();
  const auto nbar = solve(G1, phi.matrix().transpose() * G2);
  if (!nbar) throw std::logic_error("Gram matrix is singular");
  LinearMap<S> adj(phi.cod(), phi.dom(), nbar->conjugate());
  for (std::size_t i = 0; i < phi.dom().dim(); ++i)
    for (std::size_t j = 0; j < phi.cod().dim(); ++j) {
      Vec<S> ei(phi.dom().dim(), S(0)), ej(phi.cod().dim(), S(0));
      ei[i] = S(1);
      ej[j] = S(1);
      if (!(inner(phi.cod(), phi(ei), ej) == inner(phi.dom(), ei, adj(ej))))
        throw std::logic_error("linear adjoint failed its basis check");
    }
  return adj;
}

template <class S>
Subspace<S> image(const LinearMap<S>& phi) {
  std::vector<Vec<S>> cols;
  for (std::size_t j = 0; j < phi.matrix().cols(); ++j) cols.push_back(phi.matrix().col(j));
  return Subspace<S>::span(phi.cod().dim(), cols);
}

template <class S>
struct LinearLabels {
  bool unitary = false;
  bool isometry = false;
  bool self_adjoint = false;
  std::optional<Subspace<S>> projection_onto;

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    if (unitary) out.push_back("unitary");
    if (isometry) out.push_back("isometry");
    if (projection_onto) out.push_back("projection");
    if (self_adjoint) out.push_back("self_adjoint");
    if (out.empty()) out.push_back("none");
    return out;
  }
};

template <class S>
LinearLabels<S> classify_linear(const LinearMap<S>& phi) {
  LinearLabels<S> out;
  const auto adj = linear_adjoint(phi);
  const auto id_dom = Matrix<S>::identity(phi.dom().dim());
  const auto id_cod = Matrix<S>::identity(phi.cod().dim());
  out.isometry = adj.matrix() * phi.matrix() == id_dom;
  out.unitary = out.isometry && phi.matrix() * adj.matrix() == id_cod;
  if (phi.dom() == phi.cod()) {
    out.self_adjoint = adj.matrix() == phi.matrix();
    if (out.self_adjoint && phi.matrix() * phi.matrix() == phi.matrix()) out.projection_onto = image(phi);
  }
  return out;
}

// Gram-Schmidt on the canonical basis of s, then each vector scaled to unit
// length. nullopt when some norm has no root in the field; that decides
// uniformity for lines but is only sufficient in higher dimension.
template <class S>
std::optional<Matrix<S>> orthonormal_basis(const HermitianSpace<S>& H, const Subspace<S>& s) {
  std::vector<Vec<S>> out;
  for (auto v : s.vectors()) {
    for (const auto& u : out) {
      const S c = inner(H, v, u);
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= S(c * u[k]);
    }
    const auto root = scalar_traits<S>::norm_root(Rational(1) / real_part(inner(H, v, v)));
    if (!root) return std::nullopt;
    for (auto& x : v) x = S(x * *root);
    out.push_back(std::move(v));
  }
  Matrix<S> m(H.dim(), out.size());
  for (std::size_t j = 0; j < out.size(); ++j)
    for (std::size_t i = 0; i < H.dim(); ++i) m(i, j) = out[j][i];
  return m;
}

template <class S>
HermitianSpace<S> direct_sum(const HermitianSpace<S>& a, const HermitianSpace<S>& b) {
  return HermitianSpace<S>(block_diagonal(a.gram(), b.gram()));
}

// The block map; the adjoint-of-sum law is checked on the way out.
template <class S>
LinearMap<S> direct_sum_map(const LinearMap<S>& phi, const LinearMap<S>& psi) {
  LinearMap<S> out(direct_sum(phi.dom(), psi.dom()), direct_sum(phi.cod(), psi.cod()),
                   block_diagonal(phi.matrix(), psi.matrix()));
  if (!(linear_adjoint(out).matrix() ==
        block_diagonal(linear_adjoint(phi).matrix(), linear_adjoint(psi).matrix())))
    throw std::logic_error("adjoint of a direct sum is not the sum of adjoints");
  return out;
}

// Orthogonal projector onto s. With the basis as columns B and
// M = Bᵀ G conj(B), π = B (M⁻¹)ᵀ Bᴴ Gᵀ.
template <class S>
LinearMap<S> projector(const HermitianSpace<S>& H, const Subspace<S>& s) {
  if (s.dim() == 0) return LinearMap<S>::zero(H, H);
  const Matrix<S> B = s.basis().transpose();
  const Matrix<S> M = B.transpose() * H.gram() * B.conjugate();
  const auto Minv = inverse(M);
  if (!Minv) throw std::logic_error("restricted Gram matrix is singular");
  return LinearMap<S>(H, H, B * Minv->transpose() * B.conj_transpose() * H.gram().transpose());
}

}  // namespace orthokit
