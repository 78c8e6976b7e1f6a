#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace facta {

using CatId = std::uint32_t;

enum class AttrKind : std::uint8_t { Numeric, Categorical };

/// A single field of a tuple: either a finite double or an interned
/// categorical id. The kind is fixed per attribute by the schema.
class Value {
 public:
  Value() = default;
  static Value number(double v) {
    Value x;
    x.kind_ = AttrKind::Numeric;
    x.num_ = v;
    return x;
  }
  static Value category(CatId id) {
    Value x;
    x.kind_ = AttrKind::Categorical;
    x.cat_ = id;
    return x;
  }

  AttrKind kind() const { return kind_; }
  bool is_numeric() const { return kind_ == AttrKind::Numeric; }
  double num() const { return num_; }
  CatId cat() const { return cat_; }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ == AttrKind::Numeric ? a.num_ == b.num_ : a.cat_ == b.cat_;
  }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
  // Total order; numerics sort before categoricals (mixed kinds never occur
  // within one attribute).
  friend bool operator<(const Value& a, const Value& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    return a.kind_ == AttrKind::Numeric ? a.num_ < b.num_ : a.cat_ < b.cat_;
  }

  std::size_t hash() const {
    if (kind_ == AttrKind::Numeric) {
      // -0.0 and 0.0 compare equal; normalise before hashing.
      double d = num_ == 0.0 ? 0.0 : num_;
      return std::hash<double>{}(d);
    }
    return std::hash<std::uint64_t>{}(0x9e3779b97f4a7c15ull ^ cat_);
  }

 private:
  AttrKind kind_ = AttrKind::Numeric;
  double num_ = 0.0;
  CatId cat_ = 0;
};

using Tuple = std::vector<Value>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const {
    std::size_t h = 0x345678;
    for (const Value& v : t) h = h * 1000003u ^ v.hash();
    return h ^ t.size();
  }
};

struct TupleLess {
  bool operator()(const Tuple& a, const Tuple& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Interning table for one categorical attribute. Ids are dense and assigned
/// in first-seen order, so value iteration by id is deterministic.
class Dictionary {
 public:
  CatId intern(std::string_view s);
  std::optional<CatId> lookup(std::string_view s) const;
  const std::string& spelling(CatId id) const { return spellings_[id]; }
  std::size_t size() const { return spellings_.size(); }

 private:
  std::vector<std::string> spellings_;
  std::unordered_map<std::string, CatId> ids_;
};

/// Dictionaries shared across relations, keyed by attribute name. Attributes
/// with the same name join against each other, so they must intern into the
/// same table.
class DictionaryPool {
 public:
  Dictionary& for_attr(const std::string& attr) { return dicts_[attr]; }
  const Dictionary* find(const std::string& attr) const {
    auto it = dicts_.find(attr);
    return it == dicts_.end() ? nullptr : &it->second;
  }

 private:
  std::unordered_map<std::string, Dictionary> dicts_;
};

}  // namespace facta
