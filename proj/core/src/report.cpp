#include "polyprobe/report.hpp"

#include <array>

namespace polyprobe {

namespace {

constexpr std::array<std::pair<Branch, std::string_view>, 8> kBranchNames{{
    {Branch::kInit, "init"},
    {Branch::kConfirmB, "confirm-b"},
    {Branch::kConfirmAC, "confirm-ac"},
    {Branch::kSplit, "split"},
    {Branch::kBound, "bound"},
    {Branch::kCaseI, "case-I"},
    {Branch::kCaseII, "case-II"},
    {Branch::kCaseIII, "case-III"},
}};

constexpr std::array<std::pair<AlgorithmKind, std::string_view>, 5> kAlgorithmNames{{
    {AlgorithmKind::kR1, "r1"},
    {AlgorithmKind::kR2, "r2"},
    {AlgorithmKind::kNf1, "nf1"},
    {AlgorithmKind::kNf2, "nf2"},
    {AlgorithmKind::kNf3, "nf3"},
}};

}  // namespace

std::string_view branch_name(Branch branch) {
  for (const auto& [value, name] : kBranchNames) {
    if (value == branch) return name;
  }
  return "?";
}

std::optional<Branch> branch_from_name(std::string_view name) {
  for (const auto& [value, text] : kBranchNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

std::string_view algorithm_name(AlgorithmKind kind) {
  for (const auto& [value, name] : kAlgorithmNames) {
    if (value == kind) return name;
  }
  return "?";
}

std::optional<AlgorithmKind> algorithm_from_name(std::string_view name) {
  for (const auto& [value, text] : kAlgorithmNames) {
    if (text == name) return value;
  }
  return std::nullopt;
}

}  // namespace polyprobe
