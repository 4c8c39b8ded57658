#include "charclass/classes.hpp"

#include <future>

#include "charclass/groebner.hpp"

namespace charclass {

namespace {

constexpr std::uint64_t kSegreRetryLabel = 0x5345475245000001ULL;

void warn(const ClassOptions& options, const std::string& message) {
  if (options.warn) options.warn(message);
}

// Singularity-Segre route for one hypersurface; must agree with the polar one.
ChowClass csm_via_singularity(const PolarData& data) {
  const std::size_t n = data.polar.n();
  if (data.degree <= 1) return csm_from_singularity_segre(ChowClass(n), data.degree);
  return csm_from_singularity_segre(segre_from_degrees(data.polar, data.degree - 1), data.degree);
}

}  // namespace

std::optional<PolarData> PolarCache::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void PolarCache::insert(const std::string& key, const PolarData& value) {
  std::lock_guard lock(mutex_);
  entries_.emplace(key, value);
}

std::size_t PolarCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

ChowClass segre_class(const IdealSpec& I, const RandomScalarSource& src, const ClassOptions& options) {
  if (!I.homogeneous) throw UnsupportedError("segre_class needs a homogeneous ideal");
  const IdealSpec E = I.equalized() ? I : equalize_degrees(I);
  if (E.d == 0) {
    warn(options, "the ideal is the unit ideal; V is empty and its Segre class is 0");
    return ChowClass(E.n);
  }
  const unsigned d = static_cast<unsigned>(E.d);
  RandomScalarSource stream = src;
  for (int round = 0; round < 2; ++round) {
    const ProjectiveDegrees g = projective_degrees(E, stream, options.degrees);
    const ChowClass s = segre_from_degrees(g, d);
    const std::size_t codim = codim_from_degrees(g, d);
    if (codim == E.n + 1) {
      if (!s.is_zero()) throw InternalError("empty scheme with a nonzero Segre class");
      warn(options, "V is empty; its Segre class is 0");
      return s;
    }
    if (ejp_segre_from_degrees(g, d, codim) == s) return s;
    stream = src.substream(kSegreRetryLabel);
  }
  throw InternalError("Segre class formulas disagree after resampling");
}

PolarData polar_data(const Polynomial& f, const RandomScalarSource& src, const ClassOptions& options) {
  if (f.is_zero() || f.is_constant()) throw UnsupportedError("c_SM of a hypersurface needs a nonconstant form");
  if (!f.is_homogeneous()) throw UnsupportedError("c_SM of a hypersurface needs a homogeneous form");
  PolarData data{squarefree_part(f), 0, {}};
  data.degree = static_cast<unsigned>(data.reduced.total_degree());
  std::vector<Polynomial> partials;
  for (std::size_t j = 0; j < data.reduced.ring()->nvars(); ++j) {
    Polynomial df = partial_derivative(data.reduced, j);
    if (!df.is_zero()) partials.push_back(std::move(df));
  }
  if (partials.empty())
    throw UnsupportedError("every partial derivative of " + data.reduced.to_string() +
                           " vanishes in characteristic " + std::to_string(f.field().characteristic()));
  data.polar = projective_degrees(IdealSpec::from_generators(std::move(partials)), src, options.degrees);
  return data;
}

ChowClass csm_hypersurface(const Polynomial& f, const RandomScalarSource& src, const ClassOptions& options) {
  const PolarData data = polar_data(f, src, options);
  ChowClass c = csm_from_polar_degrees(data.polar);
  if (csm_via_singularity(data) != c) throw InternalError("c_SM formulas disagree for " + data.reduced.to_string());
  return c;
}

std::vector<SubsetTerm> subset_terms(const IdealSpec& I) {
  const std::size_t r = I.generators.size();
  if (r >= 32) throw UnsupportedError("too many generators for inclusion/exclusion");
  std::vector<Polynomial> reduced;
  for (const auto& g : I.generators) reduced.push_back(squarefree_part(g));
  std::vector<SubsetTerm> terms;
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    Polynomial product = Polynomial::constant(I.ring(), 1);
    int size = 0;
    for (std::size_t k = 0; k < r; ++k)
      if (mask & (1u << k)) {
        product = product * reduced[k];
        ++size;
      }
    terms.push_back({mask, squarefree_part(product), size % 2 == 1 ? 1 : -1});
  }
  return terms;
}

ChowClass csm_class(const IdealSpec& I, const RandomScalarSource& src, const ClassOptions& options,
                    PolarCache* cache) {
  if (!I.homogeneous) throw UnsupportedError("csm_class needs a homogeneous ideal");
  const std::size_t r = I.generators.size();
  if (r > options.r_max)
    throw UnsupportedError("csm_class needs 2^" + std::to_string(r) + " - 1 hypersurface computations; " +
                           "the limit is " + std::to_string(options.r_max) +
                           " generators. Remove redundant generators or raise the limit");
  PolarCache local;
  if (!cache) cache = &local;

  std::vector<SubsetTerm> terms = subset_terms(I);
  for (const auto& t : terms)
    if (t.product.is_constant()) {
      warn(options, "the ideal contains a unit; V is empty and c_SM(V) = 0");
      return ChowClass(I.n);
    }

  // One computation per distinct product, streamed by its first subset.
  std::map<std::string, std::uint32_t> first_mask;
  for (const auto& t : terms) first_mask.emplace(t.product.to_string(), t.mask);
  std::vector<std::pair<std::string, const SubsetTerm*>> jobs;
  for (const auto& t : terms) {
    auto it = first_mask.find(t.product.to_string());
    if (it->second == t.mask) jobs.emplace_back(it->first, &t);
  }
  auto run = [&](const std::string& key, const SubsetTerm& t) {
    if (cache->find(key)) return;
    cache->insert(key, polar_data(t.product, src.substream(t.mask), options));
  };
  if (options.degrees.parallel) {
    std::vector<std::future<void>> futures;
    for (const auto& [key, t] : jobs) futures.push_back(std::async(std::launch::async, run, key, *t));
    for (auto& f : futures) f.get();
  } else {
    for (const auto& [key, t] : jobs) run(key, *t);
  }

  ChowClass total(I.n);
  for (const auto& t : terms) {
    const PolarData data = *cache->find(t.product.to_string());
    ChowClass c = csm_from_polar_degrees(data.polar);
    if (csm_via_singularity(data) != c) throw InternalError("c_SM formulas disagree for " + data.reduced.to_string());
    total += BigInt(t.sign) * c;
  }
  if (total.is_zero()) warn(options, "V is empty; c_SM(V) = 0");
  return total;
}

BigInt euler_characteristic(const IdealSpec& I, const RandomScalarSource& src, const ClassOptions& options) {
  return integral(csm_class(I, src, options));
}

std::vector<BigInt> euler_sections(const IdealSpec& I, const RandomScalarSource& src, const ClassOptions& options) {
  return aluffi_involution(csm_class(I, src, options));
}

}  // namespace charclass
