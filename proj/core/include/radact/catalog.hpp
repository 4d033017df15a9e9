#ifndef RADACT_CATALOG_HPP
#define RADACT_CATALOG_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "radact/act.hpp"
#include "radact/monoid.hpp"
#include "radact/radical.hpp"

namespace radact {

// Error{ParseError} with the offending position (1-based).
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, std::size_t column, const std::string& expected);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
};

enum class CatalogKind { Monoid, Act, RadicalTable };

using MonoidResolver = std::function<std::optional<FiniteMonoid>(const std::string&)>;
using ActResolver = std::function<std::optional<FiniteAct>(const std::string&)>;

// The first keyword of the file decides its kind.
CatalogKind detect_kind(std::istream& in, const std::string& source = "<input>");

FiniteMonoid parse_monoid(std::istream& in, const std::string& source = "<input>");
FiniteAct parse_act(std::istream& in, const MonoidResolver& monoids,
                    const std::string& source = "<input>");
// The partitions are given on the named acts and stored through their
// canonical forms.
Radical parse_radical_table(std::istream& in, const ActResolver& acts,
                            const std::string& source = "<input>");

std::string print_monoid(const FiniteMonoid& m);
std::string print_act(const FiniteAct& a);
std::string print_radical_table(const std::string& name,
                                const std::vector<std::pair<FiniteAct, Congruence>>& entries);

// Named monoids and acts loaded from files; radical tables are kept as
// parsed radicals.
class Catalog {
 public:
  // Loads one file of any kind. Acts and tables resolve names against this
  // catalog first and then `fallback_*`.
  void load_file(const std::filesystem::path& path);
  // Loads every *.monoid, *.act and *.radical file of a directory, in that
  // order and by file name within each kind.
  void load_dir(const std::filesystem::path& dir);

  void add_monoid(FiniteMonoid m);
  void add_act(FiniteAct a);

  std::optional<FiniteMonoid> monoid(const std::string& name) const;
  std::optional<FiniteAct> act(const std::string& name) const;
  const std::vector<Radical>& radicals() const { return radicals_; }

  MonoidResolver fallback_monoids;
  ActResolver fallback_acts;

 private:
  std::map<std::string, FiniteMonoid> monoids_;
  std::map<std::string, FiniteAct> acts_;
  std::vector<Radical> radicals_;
};

}  // namespace radact

#endif  // RADACT_CATALOG_HPP
