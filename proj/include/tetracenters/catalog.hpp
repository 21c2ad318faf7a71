#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tetracenters/center_expr.hpp"

namespace tc {

struct CatalogEntry {
  std::string id;
  std::string name;
  CoordForm form = CoordForm::Trilinear;
  CenterExpr expr;
  bool takes_r = false;
  bool rational_only = true;

  // Areal center function. Trilinear entries are multiplied by a with no
  // cancellation, so the representative scale is fixed by the stored formula.
  CenterExpr areal() const;
};

class Catalog {
 public:
  void add(CatalogEntry e);
  void merge(const Catalog& other);
  const CatalogEntry* find(const std::string& id) const;
  const CatalogEntry& at(const std::string& id) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, std::size_t> index_;
};

Catalog builtin_catalog();

// Lines `id | trilinear|areal | expr | yes/no`, '#' starts a comment.
Catalog parse_catalog_text(const std::string& text, const std::string& source = "<text>");
Catalog load_catalog_file(const std::string& path);

// A catalog entry with its parameter bound (r is ignored when the entry has none).
struct CenterRef {
  CatalogEntry entry;
  std::optional<Rational> r;

  std::string label() const;
  const std::optional<Rational>& param() const { return r; }
};

// "X7", "POW@2", "Z8A@-1/2"
CenterRef resolve_center(const Catalog& cat, const std::string& center_id);

// Derived centers, all in areal form.
CatalogEntry isotomic_of(const CatalogEntry& e);
CatalogEntry isogonal_of(const CatalogEntry& e);
CatalogEntry power_of(const CatalogEntry& e, long q);
CatalogEntry a_power_times(const CatalogEntry& e, long r, long q);  // a^r F^q

// Parameter values used when a parametric entry is screened without an explicit r.
std::vector<Rational> default_r_values();

}  // namespace tc
