#include "facta/relation.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace facta {

CatId Dictionary::intern(std::string_view s) {
  auto it = ids_.find(std::string(s));
  if (it != ids_.end()) return it->second;
  CatId id = static_cast<CatId>(spellings_.size());
  spellings_.emplace_back(s);
  ids_.emplace(spellings_.back(), id);
  return id;
}

std::optional<CatId> Dictionary::lookup(std::string_view s) const {
  auto it = ids_.find(std::string(s));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Schema::Schema(std::string name, std::vector<Attribute> attrs)
    : name_(std::move(name)), attrs_(std::move(attrs)) {
  if (attrs_.empty())
    throw ConfigError("schema '" + name_ + "' has no attributes");
  std::unordered_set<std::string> seen;
  for (const auto& a : attrs_)
    if (!seen.insert(a.name).second)
      throw ConfigError("schema '" + name_ + "' repeats attribute '" + a.name +
                        "'");
}

int Schema::find(std::string_view attr) const {
  for (std::size_t i = 0; i < attrs_.size(); ++i)
    if (attrs_[i].name == attr) return static_cast<int>(i);
  return -1;
}

Relation Relation::from_rows(Schema schema, std::vector<Entry> rows) {
  for (const auto& [t, m] : rows)
    if (t.size() != schema.arity())
      throw DataError("tuple arity " + std::to_string(t.size()) +
                      " does not match schema '" + schema.name() + "' arity " +
                      std::to_string(schema.arity()));
  std::sort(rows.begin(), rows.end(), [](const Entry& a, const Entry& b) {
    return TupleLess{}(a.first, b.first);
  });
  Relation r(std::move(schema));
  for (auto& [t, m] : rows) {
    if (!r.entries_.empty() && r.entries_.back().first == t) {
      r.entries_.back().second += m;
      if (r.entries_.back().second == 0) r.entries_.pop_back();
    } else if (m != 0) {
      r.entries_.emplace_back(std::move(t), m);
    }
  }
  return r;
}

std::int64_t Relation::multiplicity(const Tuple& t) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), t,
      [](const Entry& e, const Tuple& key) { return TupleLess{}(e.first, key); });
  if (it != entries_.end() && it->first == t) return it->second;
  return 0;
}

Relation add(const Relation& r1, const Relation& r2) {
  const auto& a1 = r1.schema().attributes();
  const auto& a2 = r2.schema().attributes();
  bool same = r1.schema().name() == r2.schema().name() && a1.size() == a2.size();
  for (std::size_t i = 0; same && i < a1.size(); ++i)
    same = a1[i].name == a2[i].name && a1[i].kind == a2[i].kind;
  if (!same)
    throw ConfigError("add: schema mismatch between '" + r1.schema().name() +
                      "' and '" + r2.schema().name() + "'");

  std::vector<Relation::Entry> merged;
  merged.reserve(r1.size() + r2.size());
  auto i = r1.entries().begin(), e1 = r1.entries().end();
  auto j = r2.entries().begin(), e2 = r2.entries().end();
  while (i != e1 || j != e2) {
    if (j == e2 || (i != e1 && TupleLess{}(i->first, j->first))) {
      merged.push_back(*i++);
    } else if (i == e1 || TupleLess{}(j->first, i->first)) {
      merged.push_back(*j++);
    } else {
      std::int64_t m = i->second + j->second;
      if (m != 0) merged.emplace_back(i->first, m);
      ++i;
      ++j;
    }
  }
  return Relation::from_rows(r1.schema(), std::move(merged));
}

namespace {

std::vector<std::string> split_line(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(delim, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

double parse_number(const std::string& field, std::size_t row, std::size_t col) {
  const char* begin = field.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(begin, &end);
  // strtod accepts leading whitespace; require full consumption of the field.
  if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v))
    throw DataError("row " + std::to_string(row) + ", column " +
                    std::to_string(col + 1) + ": cannot parse numeric value '" +
                    field + "'");
  return v;
}

}  // namespace

const Relation& Database::load_csv(const Schema& schema, const std::string& path,
                                   const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path + "'");
  check_kinds(schema);

  std::vector<Relation::Entry> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 && options.header) continue;
    if (line.empty()) continue;
    auto fields = split_line(line, options.delimiter);
    if (fields.size() != schema.arity())
      throw DataError("row " + std::to_string(lineno) + ": expected " +
                      std::to_string(schema.arity()) + " fields, got " +
                      std::to_string(fields.size()));
    Tuple t;
    t.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      const Attribute& attr = schema.attribute(c);
      if (attr.kind == AttrKind::Numeric)
        t.push_back(Value::number(parse_number(fields[c], lineno, c)));
      else
        t.push_back(Value::category(dicts_.for_attr(attr.name).intern(fields[c])));
    }
    rows.emplace_back(std::move(t), 1);
  }
  return add_relation(Relation::from_rows(schema, std::move(rows)));
}

const Relation& Database::add_relation(Relation r) {
  check_kinds(r.schema());
  for (const auto& existing : relations_)
    if (existing.schema().name() == r.schema().name())
      throw ConfigError("duplicate relation '" + r.schema().name() + "'");
  relations_.push_back(std::move(r));
  return relations_.back();
}

void Database::check_kinds(const Schema& schema) const {
  for (const auto& a : schema.attributes())
    for (const auto& r : relations_) {
      int i = r.schema().find(a.name);
      if (i >= 0 && r.schema().attribute(i).kind != a.kind)
        throw ConfigError("attribute '" + a.name +
                          "' declared with conflicting kinds");
    }
}

const Relation& Database::relation(std::string_view name) const {
  int i = relation_index(name);
  if (i < 0) throw ConfigError("unknown relation '" + std::string(name) + "'");
  return relations_[i];
}

int Database::relation_index(std::string_view name) const {
  for (std::size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].schema().name() == name) return static_cast<int>(i);
  return -1;
}

AttrKind Database::attr_kind(std::string_view attr) const {
  for (const auto& r : relations_) {
    int i = r.schema().find(attr);
    if (i >= 0) return r.schema().attribute(i).kind;
  }
  throw ConfigError("unknown attribute '" + std::string(attr) + "'");
}

bool Database::has_attr(std::string_view attr) const {
  for (const auto& r : relations_)
    if (r.schema().contains(attr)) return true;
  return false;
}

std::string value_to_string(const Value& v, const Dictionary* dict) {
  if (v.is_numeric()) {
    std::ostringstream os;
    os.precision(17);
    os << v.num();
    return os.str();
  }
  return dict ? dict->spelling(v.cat()) : ("#" + std::to_string(v.cat()));
}

void save_csv(const Relation& r, const DictionaryPool& dicts,
              const std::string& path, const CsvOptions& options) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  const auto& schema = r.schema();
  if (options.header) {
    for (std::size_t c = 0; c < schema.arity(); ++c)
      out << (c ? std::string(1, options.delimiter) : "") << schema.attribute(c).name;
    out << '\n';
  }
  for (const auto& [t, m] : r.entries()) {
    if (m < 0)
      throw DataError("relation '" + schema.name() +
                      "' has negative multiplicities; not CSV-representable");
    for (std::int64_t k = 0; k < m; ++k) {
      for (std::size_t c = 0; c < t.size(); ++c) {
        if (c) out << options.delimiter;
        out << value_to_string(t[c], dicts.find(schema.attribute(c).name));
      }
      out << '\n';
    }
  }
}

}  // namespace facta
