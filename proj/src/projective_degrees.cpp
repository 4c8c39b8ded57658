#include "charclass/projective_degrees.hpp"

#include <future>
#include <string>

#include "charclass/groebner.hpp"

namespace charclass {

namespace {

constexpr std::uint64_t kVerifyLabel = 0x7665726966790001ULL;

std::string fresh_name(const Ring& ring, std::string name) {
  while (ring.index_of(name)) name += '_';
  return name;
}

GroebnerOptions gb_options(const DegreeOptions& options) {
  GroebnerOptions gb;
  gb.deadline = options.deadline;
  return gb;
}

// Solves the linear and affine generators for pivot variables and rewrites
// the remaining generators over the free x variables and T.
std::uint64_t count_by_substitution(const DegreeSystem& system, const DegreeOptions& options) {
  const Ring& ring = *system.ring;
  const PrimeField& F = ring.field();
  const std::size_t vars = ring.nvars() - 1;  // x_0..x_n
  const std::size_t t_index = vars;
  const std::size_t first_linear = system.i;
  const std::size_t linear_rows = system.linear_count() + 1;

  // Row r: coefficients of x_0..x_n, then the constant.
  std::vector<std::vector<Coeff>> rows(linear_rows, std::vector<Coeff>(vars + 1, 0));
  for (std::size_t r = 0; r < linear_rows; ++r) {
    const Polynomial& f = system.generators[first_linear + r];
    for (std::size_t k = 0; k < f.size(); ++k) {
      auto e = f.exponents(k);
      std::size_t col = vars;
      for (std::size_t j = 0; j < vars; ++j)
        if (e[j]) col = j;
      rows[r][col] = f.coeff(k);
    }
  }

  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(vars, false);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < vars && rank < linear_rows; ++col) {
    std::size_t sel = rank;
    while (sel < linear_rows && rows[sel][col] == 0) ++sel;
    if (sel == linear_rows) continue;
    std::swap(rows[rank], rows[sel]);
    const Coeff inv = F.inverse(rows[rank][col]);
    for (auto& c : rows[rank]) c = F.mul(c, inv);
    for (std::size_t r = 0; r < linear_rows; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Coeff factor = rows[r][col];
      for (std::size_t j = 0; j <= vars; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(factor, rows[rank][j]));
    }
    pivot_of_row.push_back(col);
    is_pivot[col] = true;
    ++rank;
  }
  if (rank < linear_rows) throw GenericityError("random linear forms are dependent");

  std::vector<std::string> names;
  std::vector<std::size_t> new_index(vars, 0);
  for (std::size_t j = 0; j < vars; ++j)
    if (!is_pivot[j]) {
      new_index[j] = names.size();
      names.push_back(ring.names()[j]);
    }
  const std::size_t t_new = names.size();
  names.push_back(ring.names()[t_index]);
  RingPtr small = Ring::make(std::move(names), F);

  std::vector<Polynomial> images(ring.nvars(), Polynomial(small));
  for (std::size_t j = 0; j < vars; ++j)
    if (!is_pivot[j]) images[j] = Polynomial::variable(small, new_index[j]);
  images[t_index] = Polynomial::variable(small, t_new);
  for (std::size_t r = 0; r < rank; ++r) {
    // x_p + sum_f a_f x_f + c = 0
    const std::size_t p = pivot_of_row[r];
    Polynomial img = Polynomial::constant(small, F.neg(rows[r][vars]));
    for (std::size_t j = 0; j < vars; ++j)
      if (!is_pivot[j] && rows[r][j] != 0) img -= Polynomial::variable(small, new_index[j]).scaled(rows[r][j]);
    images[p] = img;
  }

  std::vector<Polynomial> reduced;
  for (std::size_t k = 0; k < system.generators.size(); ++k) {
    if (k >= first_linear && k < first_linear + linear_rows) continue;
    Polynomial s = substitute(system.generators[k], images);
    if (!s.is_zero()) reduced.push_back(std::move(s));
  }
  return quotient_dimension(buchberger(reduced, small, gb_options(options)));
}

std::uint64_t count_with_retries(const IdealSpec& I, std::size_t i, const RandomScalarSource& root,
                                 const DegreeOptions& options, unsigned first_attempt) {
  std::string last;
  for (unsigned attempt = first_attempt; attempt < first_attempt + options.retries; ++attempt) {
    try {
      return count_solutions(build_degree_system(I, i, root, attempt), options);
    } catch (const DimensionError& e) {
      last = e.what();
    } catch (const GenericityError& e) {
      last = e.what();
    }
  }
  throw GenericityError("g_" + std::to_string(i) + ": no generic draw after " + std::to_string(options.retries) +
                        " attempts (" + last + "); try a different seed or a larger prime");
}

}  // namespace

DegreeSystem build_degree_system(const IdealSpec& I, std::size_t i, const RandomScalarSource& src,
                                 std::uint64_t attempt) {
  if (!I.equalized()) throw UnsupportedError("build_degree_system needs an equalized ideal");
  const std::size_t n = I.n;
  if (i < 1 || i > n) throw UnsupportedError("degree index out of range");

  DegreeSystem sys;
  sys.i = i;
  sys.ring = I.ring()->with_variable(fresh_name(*I.ring(), "T"));
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators) gens.push_back(g.in_ring(sys.ring));

  const RandomScalarSource base = src.substream(i).substream(attempt);
  std::uint64_t slot = 0;
  auto next_stream = [&] {
    RandomScalarSource s = base.substream(slot++);
    sys.streams.push_back(s.stream());
    return s;
  };
  for (std::size_t l = 0; l < i; ++l) {
    auto s = next_stream();
    sys.generators.push_back(random_combination(gens, s));
  }
  for (std::size_t l = 0; l < n - i; ++l) {
    auto s = next_stream();
    sys.generators.push_back(random_form(sys.ring, s, false, n + 1));
  }
  {
    auto s = next_stream();
    sys.generators.push_back(random_form(sys.ring, s, true, n + 1));
  }
  {
    auto s = next_stream();
    const Polynomial T = Polynomial::variable(sys.ring, n + 1);
    sys.generators.push_back(Polynomial::constant(sys.ring, 1) - T * random_combination(gens, s));
  }
  return sys;
}

std::uint64_t count_solutions(const DegreeSystem& system, const DegreeOptions& options) {
  if (options.deadline) options.deadline->check();
  if (options.substitute_linear) return count_by_substitution(system, options);
  return quotient_dimension(buchberger(system.generators, system.ring, gb_options(options)));
}

std::uint64_t projective_degree_i(const IdealSpec& I, std::size_t i, const RandomScalarSource& src,
                                  const DegreeOptions& options) {
  if (options.verify == 0) return count_with_retries(I, i, src, options, 0);
  std::string seen;
  for (unsigned round = 0; round < options.retries; ++round) {
    const unsigned offset = round * options.retries;
    const std::uint64_t first = count_with_retries(I, i, src, options, offset);
    seen = std::to_string(first);
    bool agree = true;
    for (unsigned k = 1; k <= options.verify && agree; ++k) {
      const std::uint64_t again = count_with_retries(I, i, src.substream(kVerifyLabel + k), options, offset);
      if (again != first) {
        seen += " vs " + std::to_string(again);
        agree = false;
      }
    }
    if (agree) return first;
  }
  throw GenericityError("g_" + std::to_string(i) + ": independent draws disagree (" + seen +
                        "); try a different seed or a larger prime");
}

ProjectiveDegrees projective_degrees(const IdealSpec& I, const RandomScalarSource& src, const DegreeOptions& options) {
  if (!I.homogeneous) throw UnsupportedError("projective degrees need a homogeneous ideal");
  const IdealSpec E = I.equalized() ? I : equalize_degrees(I);
  const std::size_t n = E.n;
  std::vector<BigInt> g(n + 1);
  g[0] = 1;
  if (options.parallel && n > 1) {
    std::vector<std::future<std::uint64_t>> jobs;
    for (std::size_t i = 1; i <= n; ++i)
      jobs.push_back(std::async(std::launch::async, [&, i] { return projective_degree_i(E, i, src, options); }));
    for (std::size_t i = 1; i <= n; ++i) g[i] = jobs[i - 1].get();
  } else {
    for (std::size_t i = 1; i <= n; ++i) g[i] = projective_degree_i(E, i, src, options);
  }
  return ProjectiveDegrees(std::move(g));
}

ChowClass shadow_class(const ProjectiveDegrees& g) {
  if (g.g.empty()) throw UnsupportedError("empty projective degree list");
  return ChowClass(g.n(), g.g);
}

}  // namespace charclass
