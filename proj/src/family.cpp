#include "gnl/family.hpp"

#include <numeric>

#include "gnl/errors.hpp"

namespace gnl::family {

std::size_t Layout::wedge_slot(std::size_t i, std::size_t j) const {
  if (i >= j || j >= n) throw InputError("wedge_slot needs i < j < n");
  // Pairs (i', j') with i' < i come first: sum_{t<i} (n - 1 - t).
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::size_t Layout::wedge_index(std::size_t i, std::size_t j) const {
  return i < j ? wedge[wedge_slot(i, j)] : wedge[wedge_slot(j, i)];
}

std::vector<std::size_t> Layout::w_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = n; i < dim; ++i) out.push_back(i);
  return out;
}

std::vector<std::size_t> Layout::layer(int k) const {
  std::vector<std::size_t> out;
  std::size_t lo = 0;
  std::size_t hi = 0;
  switch (k) {
    case 1: lo = 0, hi = u; break;
    case 2: lo = u, hi = us.empty() ? f : us.front(); break;
    case 3: lo = us.empty() ? f : us.front(), hi = dim; break;
    default: throw InputError("layer must be 1, 2 or 3");
  }
  for (std::size_t i = lo; i < hi; ++i) out.push_back(i);
  return out;
}

Layout layout(std::size_t n) {
  if (n < 1) throw InputError("family parameter n must be at least 1");
  Layout lay;
  lay.n = n;
  std::size_t next = 0;
  auto take = [&]() { return next++; };
  for (std::size_t i = 0; i < n; ++i) lay.e.push_back(take());
  lay.a = take();
  lay.b = take();
  lay.x = take();
  lay.u = take();
  lay.y = take();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) lay.wedge.push_back(take());
  }
  lay.c = take();
  for (std::size_t i = 0; i < n; ++i) lay.xs.push_back(take());
  for (std::size_t i = 0; i < n; ++i) lay.us.push_back(take());
  for (std::size_t i = 0; i < n; ++i) lay.ys.push_back(take());
  lay.f = take();
  lay.h = take();
  lay.dim = next;
  return lay;
}

namespace {

std::vector<std::string> labels_for(const Layout& lay) {
  std::vector<std::string> labels(lay.dim);
  const auto num = [](std::size_t i) { return std::to_string(i + 1); };
  for (std::size_t i = 0; i < lay.n; ++i) {
    labels[lay.e[i]] = "e" + num(i);
    labels[lay.xs[i]] = "x" + num(i);
    labels[lay.us[i]] = "u" + num(i);
    labels[lay.ys[i]] = "y" + num(i);
    for (std::size_t j = i + 1; j < lay.n; ++j) labels[lay.wedge_index(i, j)] = "e" + num(i) + "^e" + num(j);
  }
  labels[lay.a] = "a";
  labels[lay.b] = "b";
  labels[lay.x] = "x";
  labels[lay.u] = "u";
  labels[lay.y] = "y";
  labels[lay.c] = "c";
  labels[lay.f] = "f";
  labels[lay.h] = "h";
  return labels;
}

void set_unit(StructureConstants& L, std::size_t i, std::size_t j, std::size_t k) {
  L.set_bracket(i, j, {{k, Rational(1)}});
}

}  // namespace

Built build(std::size_t n, bool check) {
  Layout lay = layout(n);
  StructureConstants L(labels_for(lay));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) set_unit(L, lay.e[i], lay.e[j], lay.wedge_index(i, j));
    set_unit(L, lay.e[i], lay.x, lay.xs[i]);
    set_unit(L, lay.e[i], lay.u, lay.us[i]);
    set_unit(L, lay.e[i], lay.y, lay.ys[i]);
  }
  set_unit(L, lay.a, lay.b, lay.c);
  set_unit(L, lay.a, lay.y, lay.f);
  set_unit(L, lay.a, lay.c, lay.h);
  set_unit(L, lay.b, lay.u, lay.h);
  set_unit(L, lay.b, lay.y, lay.h);
  set_unit(L, lay.x, lay.u, lay.f);
  set_unit(L, lay.x, lay.y, lay.h);

  std::vector<std::uint64_t> weights(lay.dim);
  for (int k = 1; k <= 3; ++k) {
    for (auto i : lay.layer(k)) weights[i] = static_cast<std::uint64_t>(k);
  }
  Built built{std::move(L), line_grading(weights), lay};

  if (check) {
    if (!check_jacobi(built.algebra).empty()) throw std::logic_error("n(n) fails the Jacobi identity");
    const auto series = lower_central_series(built.algebra);
    if (!series.nilpotent || series.nilpotency_class != 3) throw std::logic_error("n(n) is not 3-step nilpotent");
    if (!validate(built.algebra, built.grading).empty()) throw std::logic_error("canonical grading is invalid");
    if (center(built.algebra).dim() != dims(n).z) throw std::logic_error("center dimension mismatch");
  }
  return built;
}

Dims dims(std::uint64_t n) {
  if (n < 1) throw InputError("family parameter n must be at least 1");
  return Dims{n + 3, n * (n + 1) / 2 + 3, 2 * n + 2, (n + 4) * (n + 1) / 2, n * (n + 1) / 2, 2, 1};
}

Dims measured_dims(const Built& built) {
  const Layout& lay = built.layout;
  const std::size_t N = lay.dim;
  auto span_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVec> vs;
    for (auto i : idx) vs.push_back(unit_vector(N, i));
    return Subspace::span(N, vs);
  };
  const Subspace layer2 = span_of(lay.layer(2));
  const Subspace z = center(built.algebra);
  const auto series = lower_central_series(built.algebra);
  const Subspace derived = series.terms.size() > 1 ? series.terms[1] : Subspace(N);

  const std::size_t in_derived = layer2.intersection_dim(derived);
  // Non-central part of n_2 inside [n,n]: (n_2 ^ [n,n]) modulo the center.
  std::vector<RatVec> cap_basis;
  for (auto i : lay.layer(2)) {
    if (derived.contains(unit_vector(N, i))) cap_basis.push_back(unit_vector(N, i));
  }
  const Subspace cap = Subspace::span(N, cap_basis);
  Dims d{};
  d.d1 = lay.layer(1).size();
  d.d2 = lay.layer(2).size();
  d.d3 = lay.layer(3).size();
  d.z = z.dim();
  d.z2 = layer2.intersection_dim(z);
  d.d2_0 = layer2.dim() - in_derived;
  d.d2_1 = cap.dim() - cap.intersection_dim(z);
  return d;
}

RatMatrix induced_basis(const Layout& lay, const RatMatrix& P) {
  const std::size_t n = lay.n;
  if (P.rows() != n || P.cols() != n) throw InputError("basis change on E must be n x n");
  RatMatrix Q = RatMatrix::identity(lay.dim);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Q(lay.e[i], lay.e[j]) = P(i, j);
      Q(lay.xs[i], lay.xs[j]) = P(i, j);
      Q(lay.us[i], lay.us[j]) = P(i, j);
      Q(lay.ys[i], lay.ys[j]) = P(i, j);
    }
  }
  // e'_i ^ e'_j = sum_{k,l} P(k,i) P(l,j) e_k ^ e_l.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t col = lay.wedge_index(i, j);
      Q(col, col) = 0;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          Q(lay.wedge_index(k, l), col) = P(k, i) * P(l, j) - P(l, i) * P(k, j);
        }
      }
    }
  }
  return Q;
}

bool rebase_check(std::size_t n, const RatMatrix& P) {
  const Built base = build(n, false);
  (void)inverse(P);
  const RatMatrix Q = induced_basis(base.layout, P);
  return change_basis(base.algebra, Q).same_table(base.algebra);
}

std::vector<std::uint64_t> fine_weights(std::size_t n) {
  const Layout lay = layout(n);
  std::vector<std::uint64_t> w(lay.dim, 0);
  w[lay.a] = w[lay.b] = w[lay.x] = 1;
  w[lay.u] = w[lay.y] = w[lay.c] = 2;
  w[lay.f] = w[lay.h] = 3;
  std::uint64_t assigned = 15;
  std::vector<std::uint64_t> t;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t ti = assigned + 1;
    t.push_back(ti);
    w[lay.e[i]] = ti;
    w[lay.xs[i]] = ti + 1;
    w[lay.us[i]] = ti + 2;
    w[lay.ys[i]] = ti + 2;
    assigned += 4 * ti + 5;
    for (std::size_t j = 0; j < i; ++j) {
      w[lay.wedge_index(j, i)] = t[j] + ti;
      assigned += t[j] + ti;
    }
  }
  return w;
}

Grading fine_grading(std::size_t n) { return line_grading(fine_weights(n)); }

}  // namespace gnl::family
