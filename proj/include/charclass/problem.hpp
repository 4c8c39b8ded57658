#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charclass/chow.hpp"
#include "charclass/ideal.hpp"

namespace charclass {

// Line-oriented problem description:
//
//   # comment
//   name   twisted cubic
//   char   32749
//   vars   x0 x1 x2 x3
//   gen    x1*x3 - x2^2
//   expect chi 2
//
// `expect` lines (g, segre, csm, chi, sections) are only read by bench.
struct ProblemFile {
  struct Generator {
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;  // 1-based column where the expression starts
  };

  std::string name;
  std::uint32_t characteristic = kDefaultPrime;
  std::vector<std::string> variables;
  std::vector<Generator> generators;
  std::map<std::string, std::vector<BigInt>> expectations;
};

ProblemFile parse_problem(std::string_view text);
// Throws IoError when the file cannot be read.
ProblemFile read_problem(const std::filesystem::path& path);

// Builds the ideal, checking that every generator is homogeneous.
IdealSpec build_ideal(const ProblemFile& problem, std::optional<std::uint32_t> characteristic = std::nullopt);
IdealSpec load_ideal(const std::filesystem::path& path, std::optional<std::uint32_t> characteristic = std::nullopt);

}  // namespace charclass
