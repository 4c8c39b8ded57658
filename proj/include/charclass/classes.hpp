#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "charclass/chow.hpp"
#include "charclass/ideal.hpp"
#include "charclass/projective_degrees.hpp"

namespace charclass {

struct ClassOptions {
  DegreeOptions degrees = [] {
    DegreeOptions d;
    d.verify = 1;
    return d;
  }();
  // Largest generator count accepted by csm_class (2^r - 1 hypersurface terms).
  std::size_t r_max = 12;
  // Receives non-fatal diagnostics such as "empty scheme".
  std::function<void(const std::string&)> warn;
};

// Polar data of a reduced hypersurface.
struct PolarData {
  Polynomial reduced;       // monic squarefree part of the input
  unsigned degree = 0;      // deg of `reduced`
  ProjectiveDegrees polar;  // projective degrees of the gradient map
};

// Insert-or-get cache of polar data keyed by the reduced polynomial.
class PolarCache {
 public:
  std::optional<PolarData> find(const std::string& key) const;
  void insert(const std::string& key, const PolarData& value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, PolarData> entries_;
};

struct SubsetTerm {
  std::uint32_t mask = 0;  // bit k set when generator k is in the subset
  Polynomial product;      // squarefree part of the product of the subset
  int sign = 1;            // (-1)^{|S|+1}
};

// s(V, P^n). Checks the closed formula against the residual recurrence.
ChowClass segre_class(const IdealSpec& I, const RandomScalarSource& src, const ClassOptions& options = {});

// Squarefree reduction, gradient ideal without zero partials, and its
// projective degrees.
PolarData polar_data(const Polynomial& f, const RandomScalarSource& src, const ClassOptions& options = {});

ChowClass csm_hypersurface(const Polynomial& f, const RandomScalarSource& src, const ClassOptions& options = {});

// All nonempty subsets of the generators with their reduced products.
std::vector<SubsetTerm> subset_terms(const IdealSpec& I);

// c_SM(V(I)) by inclusion/exclusion over hypersurfaces. `cache` may be shared
// across calls; a private one is used when null.
ChowClass csm_class(const IdealSpec& I, const RandomScalarSource& src, const ClassOptions& options = {},
                    PolarCache* cache = nullptr);

BigInt euler_characteristic(const IdealSpec& I, const RandomScalarSource& src, const ClassOptions& options = {});

std::vector<BigInt> euler_sections(const IdealSpec& I, const RandomScalarSource& src,
                                   const ClassOptions& options = {});

}  // namespace charclass
