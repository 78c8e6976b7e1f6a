#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "facta/error.hpp"
#include "facta/value.hpp"

namespace facta {

struct Attribute {
  std::string name;
  AttrKind kind = AttrKind::Numeric;
};

class Schema {
 public:
  Schema() = default;
  Schema(std::string name, std::vector<Attribute> attrs);

  const std::string& name() const { return name_; }
  std::span<const Attribute> attributes() const { return attrs_; }
  std::size_t arity() const { return attrs_.size(); }
  const Attribute& attribute(std::size_t i) const { return attrs_[i]; }
  // Position of the named attribute, or -1.
  int find(std::string_view attr) const;
  bool contains(std::string_view attr) const { return find(attr) >= 0; }

 private:
  std::string name_;
  std::vector<Attribute> attrs_;
};

/// A relation maps tuples to signed multiplicities. Entries are kept sorted
/// by tuple, which makes scans deterministic and equality structural; no
/// zero-multiplicity entry is ever stored. Immutable after construction.
class Relation {
 public:
  using Entry = std::pair<Tuple, std::int64_t>;

  Relation() = default;
  explicit Relation(Schema schema) : schema_(std::move(schema)) {}
  // Accumulates duplicate tuples, drops zeros, sorts.
  static Relation from_rows(Schema schema, std::vector<Entry> rows);

  const Schema& schema() const { return schema_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::int64_t multiplicity(const Tuple& t) const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.entries_ == b.entries_;
  }

 private:
  Schema schema_;
  std::vector<Entry> entries_;  // sorted by tuple
};

// Pointwise multiplicity sum; schemas must be identical.
Relation add(const Relation& r1, const Relation& r2);

struct CsvOptions {
  char delimiter = ',';
  bool header = false;
};

/// Owns the relations of one workload together with the shared categorical
/// dictionaries. Attributes with the same name must agree on kind across
/// relations.
class Database {
 public:
  const Relation& load_csv(const Schema& schema, const std::string& path,
                           const CsvOptions& options = {});
  const Relation& add_relation(Relation r);

  std::span<const Relation> relations() const { return relations_; }
  const Relation& relation(std::string_view name) const;
  int relation_index(std::string_view name) const;

  DictionaryPool& dicts() { return dicts_; }
  const DictionaryPool& dicts() const { return dicts_; }

  // Kind of an attribute as declared by the relation schemas; throws
  // ConfigError for unknown attributes.
  AttrKind attr_kind(std::string_view attr) const;
  bool has_attr(std::string_view attr) const;

  // Convenience constructors for programmatic databases.
  Value cat(const std::string& attr, std::string_view spelling) {
    return Value::category(dicts_.for_attr(attr).intern(spelling));
  }
  static Value num(double v) { return Value::number(v); }

 private:
  void check_kinds(const Schema& schema) const;

  DictionaryPool dicts_;
  std::vector<Relation> relations_;
};

void save_csv(const Relation& r, const DictionaryPool& dicts,
              const std::string& path, const CsvOptions& options = {});

// Renders one value the way save_csv writes it.
std::string value_to_string(const Value& v, const Dictionary* dict);

}  // namespace facta
