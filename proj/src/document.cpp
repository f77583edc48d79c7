#include "gpd/document.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "gpd/constructions.hpp"
#include "gpd/error.hpp"

namespace gpd {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Located JSON: a DOM plus the byte offset of every value and member key,
// keyed by JSON pointer.

struct CountingIterator {
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  const char* base = nullptr;
  std::size_t* consumed = nullptr;

  reference operator*() const {
    const auto n = static_cast<std::size_t>(p - base) + 1;
    if (n > *consumed) *consumed = n;
    return *p;
  }
  CountingIterator& operator++() {
    ++p;
    return *this;
  }
  CountingIterator operator++(int) {
    auto old = *this;
    ++p;
    return old;
  }
  bool operator==(const CountingIterator& o) const { return p == o.p; }
};

std::string escape_token(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

struct Located {
  std::string_view text;
  std::string file;
  json root;
  std::unordered_map<std::string, std::size_t> value_at;
  std::unordered_map<std::string, std::size_t> key_at;

  std::pair<std::size_t, std::size_t> line_col(std::size_t offset) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    auto [line, col] = line_col(offset);
    throw ParseError(line, col, message, file);
  }
  [[noreturn]] void fail_value(const std::string& ptr, const std::string& message) const {
    auto it = value_at.find(ptr);
    fail_at(it == value_at.end() ? 0 : it->second, message);
  }
  [[noreturn]] void fail_key(const std::string& ptr, const std::string& message) const {
    auto it = key_at.find(ptr);
    if (it == key_at.end()) fail_value(ptr, message);
    fail_at(it->second, message);
  }
};

class LocatingHandler : public nlohmann::json_sax<json> {
 public:
  LocatingHandler(Located& out, const std::size_t& consumed) : out_(out), consumed_(consumed) {}

  bool null() override { return scalar(nullptr); }
  bool boolean(bool v) override { return scalar(v); }
  bool number_integer(number_integer_t v) override { return scalar(v); }
  bool number_unsigned(number_unsigned_t v) override { return scalar(v); }
  bool number_float(number_float_t v, const string_t&) override { return scalar(v); }
  bool string(string_t& v) override { return scalar(std::move(v)); }
  bool binary(binary_t&) override { return false; }

  bool start_object(std::size_t) override {
    json* slot = place(json::object());
    stack_.push_back({slot, current_ptr_});
    return true;
  }
  bool key(string_t& k) override {
    const std::size_t start = token_start();
    auto& top = stack_.back();
    if (top.node->contains(k)) out_.fail_at(start, "duplicate key \"" + k + "\"");
    pending_key_ = k;
    out_.key_at[top.ptr + "/" + escape_token(k)] = start;
    return true;
  }
  bool end_object() override {
    mark();
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override {
    json* slot = place(json::array());
    stack_.push_back({slot, current_ptr_});
    return true;
  }
  bool end_array() override {
    mark();
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
    std::string msg = ex.what();
    if (auto k = msg.find("column"); k != std::string::npos) {
      if (auto colon = msg.find(": ", k); colon != std::string::npos) msg = msg.substr(colon + 2);
    }
    out_.fail_at(position == 0 ? 0 : position - 1, msg);
  }

 private:
  struct Frame {
    json* node;
    std::string ptr;
  };

  void mark() { last_end_ = consumed_; }

  std::size_t token_start() {
    std::size_t i = last_end_;
    const auto& t = out_.text;
    while (i < t.size() && (t[i] == ' ' || t[i] == '\t' || t[i] == '\n' || t[i] == '\r' || t[i] == ',' ||
                            t[i] == ':')) {
      ++i;
    }
    mark();
    return i;
  }

  json* place(json value) {
    const std::size_t start = token_start();
    if (stack_.empty()) {
      out_.root = std::move(value);
      current_ptr_.clear();
      out_.value_at[current_ptr_] = start;
      return &out_.root;
    }
    auto& top = stack_.back();
    if (top.node->is_array()) {
      current_ptr_ = top.ptr + "/" + std::to_string(top.node->size());
      top.node->push_back(std::move(value));
      out_.value_at[current_ptr_] = start;
      return &top.node->back();
    }
    current_ptr_ = top.ptr + "/" + escape_token(pending_key_);
    auto& slot = (*top.node)[pending_key_];
    slot = std::move(value);
    out_.value_at[current_ptr_] = start;
    return &slot;
  }

  bool scalar(json value) {
    place(std::move(value));
    return true;
  }

  Located& out_;
  const std::size_t& consumed_;
  std::vector<Frame> stack_;
  std::string pending_key_;
  std::string current_ptr_;
  std::size_t last_end_ = 0;
};

std::unique_ptr<Located> locate(std::string_view text, std::string file) {
  auto out = std::make_unique<Located>();
  out->text = text;
  out->file = std::move(file);
  std::size_t consumed = 0;
  LocatingHandler handler(*out, consumed);
  CountingIterator first{text.data(), text.data(), &consumed};
  CountingIterator last{text.data() + text.size(), text.data(), &consumed};
  json::sax_parse(first, last, &handler);
  return out;
}

// ---------------------------------------------------------------------------
// Schema reading.

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot read '" + path.string() + "'", {path.string()});
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(Errc::IoError, "cannot read '" + path.string() + "'", {path.string()});
  return buf.str();
}

struct FunctorDefaults {
  GroupoidPtr domain;
  GroupoidPtr codomain;
};

class Reader;

// One parsed source text with its own base directory.
struct Source {
  std::string text;
  std::unique_ptr<Located> loc;
  std::filesystem::path base_dir;
};

class Reader {
 public:
  explicit Reader(const std::filesystem::path& top) {
    if (!top.empty()) active_.insert(source_key(top));
  }

  Document read_top(const Source& src) {
    const json& j = src.loc->root;
    const std::string ptr;
    expect_object(src, j, ptr);
    if (!j.contains("kind")) src.loc->fail_value(ptr, "missing field \"kind\"");
    const std::string kind = get_string(src, j, ptr, "kind");
    if (kind == "groupoid") return read_groupoid_object(src, j, ptr);
    if (kind == "functor") return read_functor_object(src, j, ptr, {});
    if (kind == "natiso") return read_natiso_object(src, j, ptr);
    if (kind == "catgroup") return read_catgroup_object(src, j, ptr);
    src.loc->fail_value(ptr + "/kind", "unknown kind \"" + kind + "\"");
  }

 private:
  static std::string source_key(const std::filesystem::path& path) {
    std::error_code ec;
    auto canonical = std::filesystem::weakly_canonical(path, ec);
    return (ec ? path : canonical).string();
  }

  const Source& open(const std::string& key, const std::filesystem::path& path) {
    if (auto it = sources_.find(key); it != sources_.end()) return *it->second;
    auto src = std::make_unique<Source>();
    src->text = read_file(path);
    src->base_dir = path.parent_path();
    src->loc = locate(src->text, path.string());
    const Source& ref = *src;
    sources_[key] = std::move(src);
    return ref;
  }

  static void expect_object(const Source& s, const json& j, const std::string& ptr) {
    if (!j.is_object()) s.loc->fail_value(ptr, "expected an object");
  }

  static void check_fields(const Source& s, const json& j, const std::string& ptr,
                           std::initializer_list<std::string_view> allowed,
                           std::initializer_list<std::string_view> required) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
        s.loc->fail_key(ptr + "/" + escape_token(it.key()), "unknown field \"" + it.key() + "\"");
      }
    }
    for (auto name : required) {
      if (!j.contains(name)) s.loc->fail_value(ptr, "missing field \"" + std::string(name) + "\"");
    }
  }

  static std::string member_ptr(const std::string& ptr, std::string_view key) {
    return ptr + "/" + escape_token(key);
  }

  static std::string get_string(const Source& s, const json& j, const std::string& ptr, std::string_view key) {
    const std::string p = member_ptr(ptr, key);
    const json& v = j.at(std::string(key));
    if (!v.is_string()) s.loc->fail_value(p, "\"" + std::string(key) + "\" must be a string");
    return v.get<std::string>();
  }

  static std::vector<std::string> string_array(const Source& s, const json& v, const std::string& p,
                                               std::string_view what) {
    if (!v.is_array()) s.loc->fail_value(p, std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) s.loc->fail_value(p + "/" + std::to_string(i), std::string(what) + " entries must be strings");
      out.push_back(v[i].get<std::string>());
    }
    return out;
  }

  static std::vector<std::pair<std::string, std::string>> string_map(const Source& s, const json& v,
                                                                     const std::string& p, std::string_view what) {
    if (!v.is_object()) s.loc->fail_value(p, std::string(what) + " must be an object of strings");
    std::vector<std::pair<std::string, std::string>> out;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!it.value().is_string()) {
        s.loc->fail_value(member_ptr(p, it.key()), std::string(what) + " values must be strings");
      }
      out.emplace_back(it.key(), it.value().get<std::string>());
    }
    return out;
  }

  // Value positions: inline object or a path string.
  template <class Fn>
  auto nested(const Source& s, const json& v, const std::string& p, Fn&& fn) {
    if (v.is_string()) {
      const std::string rel = v.get<std::string>();
      const std::filesystem::path path = s.base_dir / rel;
      const std::string key = source_key(path);
      if (active_.count(key)) s.loc->fail_value(p, "cyclic file reference to '" + rel + "'");
      const Source& inner = open(key, path);
      active_.insert(key);
      auto result = fn(inner, inner.loc->root, std::string());
      active_.erase(key);
      return result;
    }
    if (!v.is_object()) s.loc->fail_value(p, "expected an object or a file path");
    return fn(s, v, p);
  }

  static void check_kind(const Source& s, const json& j, const std::string& ptr, std::string_view kind) {
    if (!j.is_object() || !j.contains("kind")) return;
    if (get_string(s, j, ptr, "kind") != kind) {
      s.loc->fail_value(member_ptr(ptr, "kind"), "expected kind \"" + std::string(kind) + "\"");
    }
  }

  GroupoidPtr groupoid_value(const Source& s, const json& v, const std::string& p) {
    return nested(s, v, p, [this](const Source& src, const json& j, const std::string& ptr) {
      expect_object(src, j, ptr);
      check_kind(src, j, ptr, "groupoid");
      return read_groupoid_object(src, j, ptr);
    });
  }

  GroupoidMorphism functor_value(const Source& s, const json& v, const std::string& p, const FunctorDefaults& d) {
    return nested(s, v, p, [this, &d](const Source& src, const json& j, const std::string& ptr) {
      expect_object(src, j, ptr);
      check_kind(src, j, ptr, "functor");
      return read_functor_object(src, j, ptr, d);
    });
  }

  GroupoidPtr read_groupoid_object(const Source& s, const json& j, const std::string& ptr) {
    if (j.contains("construct")) return read_construct(s, j, ptr);
    check_fields(s, j, ptr, {"kind", "objects", "morphisms", "compose", "identities", "inverses"},
                 {"objects", "morphisms", "compose"});
    GroupoidSpec spec;
    const std::string optr = member_ptr(ptr, "objects");
    spec.objects = string_array(s, j["objects"], optr, "\"objects\"");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < spec.objects.size(); ++i) {
      if (!seen.insert(spec.objects[i]).second) {
        s.loc->fail_value(optr + "/" + std::to_string(i), "duplicate object id \"" + spec.objects[i] + "\"");
      }
    }

    const std::string mptr = member_ptr(ptr, "morphisms");
    const json& ms = j["morphisms"];
    if (!ms.is_array()) s.loc->fail_value(mptr, "\"morphisms\" must be an array");
    seen.clear();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      const std::string p = mptr + "/" + std::to_string(i);
      expect_object(s, ms[i], p);
      check_fields(s, ms[i], p, {"id", "src", "tgt"}, {"id", "src", "tgt"});
      MorphismDecl decl{get_string(s, ms[i], p, "id"), get_string(s, ms[i], p, "src"),
                        get_string(s, ms[i], p, "tgt")};
      if (!seen.insert(decl.id).second) {
        s.loc->fail_value(member_ptr(p, "id"), "duplicate morphism id \"" + decl.id + "\"");
      }
      spec.morphisms.push_back(std::move(decl));
    }

    const std::string cptr = member_ptr(ptr, "compose");
    const json& cs = j["compose"];
    if (!cs.is_array()) s.loc->fail_value(cptr, "\"compose\" must be an array of triples");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string p = cptr + "/" + std::to_string(i);
      auto triple = string_array(s, cs[i], p, "composition entries");
      if (triple.size() != 3) s.loc->fail_value(p, "composition entries are triples [a, b, ba]");
      spec.compose.push_back({triple[0], triple[1], triple[2]});
    }
    if (j.contains("identities")) {
      spec.identities = string_map(s, j["identities"], member_ptr(ptr, "identities"), "\"identities\"");
    }
    if (j.contains("inverses")) {
      spec.inverses = string_map(s, j["inverses"], member_ptr(ptr, "inverses"), "\"inverses\"");
    }
    return build_groupoid(spec);
  }

  GroupoidPtr read_construct(const Source& s, const json& j, const std::string& ptr) {
    const std::string form = get_string(s, j, ptr, "construct");
    if (form == "interval") {
      check_fields(s, j, ptr, {"kind", "construct"}, {});
      return interval_groupoid();
    }
    if (form == "product") {
      check_fields(s, j, ptr, {"kind", "construct", "factors"}, {"factors"});
      const std::string p = member_ptr(ptr, "factors");
      const json& f = j["factors"];
      if (!f.is_array() || f.size() != 2) s.loc->fail_value(p, "\"factors\" must list two groupoids");
      auto left = groupoid_value(s, f[0], p + "/0");
      auto right = groupoid_value(s, f[1], p + "/1");
      return product(left, right);
    }
    if (form == "codiscrete") {
      check_fields(s, j, ptr, {"kind", "construct", "labels"}, {"labels"});
      const std::string p = member_ptr(ptr, "labels");
      auto labels = string_array(s, j["labels"], p, "\"labels\"");
      std::set<std::string> seen;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!seen.insert(labels[i]).second) {
          s.loc->fail_value(p + "/" + std::to_string(i), "duplicate label \"" + labels[i] + "\"");
        }
      }
      return codiscrete(labels);
    }
    if (form == "cyclic") {
      check_fields(s, j, ptr, {"kind", "construct", "order"}, {"order"});
      const json& n = j["order"];
      if (!n.is_number_unsigned() || n.get<std::uint64_t>() == 0 || n.get<std::uint64_t>() > 4096) {
        s.loc->fail_value(member_ptr(ptr, "order"), "\"order\" must be an integer between 1 and 4096");
      }
      return group_as_groupoid(cyclic_group(n.get<std::size_t>()));
    }
    if (form == "group") {
      check_fields(s, j, ptr, {"kind", "construct", "elements", "table"}, {"elements", "table"});
      GroupTable table;
      const std::string eptr = member_ptr(ptr, "elements");
      table.elements = string_array(s, j["elements"], eptr, "\"elements\"");
      std::map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < table.elements.size(); ++i) {
        if (!index.emplace(table.elements[i], i).second) {
          s.loc->fail_value(eptr + "/" + std::to_string(i), "duplicate element \"" + table.elements[i] + "\"");
        }
      }
      const std::string tptr = member_ptr(ptr, "table");
      const json& t = j["table"];
      if (!t.is_array() || t.size() != table.elements.size()) {
        s.loc->fail_value(tptr, "\"table\" must have one row per element");
      }
      for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string rptr = tptr + "/" + std::to_string(i);
        auto row = string_array(s, t[i], rptr, "table rows");
        if (row.size() != table.elements.size()) s.loc->fail_value(rptr, "table rows must have one entry per element");
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < row.size(); ++k) {
          auto it = index.find(row[k]);
          if (it == index.end()) s.loc->fail_value(rptr + "/" + std::to_string(k), "unknown element \"" + row[k] + "\"");
          out.push_back(it->second);
        }
        table.product.push_back(std::move(out));
      }
      return group_as_groupoid(table);
    }
    s.loc->fail_value(member_ptr(ptr, "construct"), "unknown construction \"" + form + "\"");
  }

  GroupoidMorphism read_functor_object(const Source& s, const json& j, const std::string& ptr,
                                       const FunctorDefaults& d) {
    check_fields(s, j, ptr, {"kind", "domain", "codomain", "objects", "morphisms"}, {"objects", "morphisms"});
    auto side = [&](std::string_view key, const GroupoidPtr& fallback) {
      if (j.contains(key)) return groupoid_value(s, j[std::string(key)], member_ptr(ptr, key));
      if (!fallback) s.loc->fail_value(ptr, "missing field \"" + std::string(key) + "\"");
      return fallback;
    };
    auto dom = side("domain", d.domain);
    auto cod = side("codomain", d.codomain);
    auto objects = string_map(s, j["objects"], member_ptr(ptr, "objects"), "\"objects\"");
    auto morphisms = string_map(s, j["morphisms"], member_ptr(ptr, "morphisms"), "\"morphisms\"");
    return GroupoidMorphism::from_names(std::move(dom), std::move(cod), objects, morphisms);
  }

  NaturalIsomorphism read_natiso_object(const Source& s, const json& j, const std::string& ptr) {
    check_fields(s, j, ptr, {"kind", "source", "target", "components"}, {"source", "target", "components"});
    auto f = functor_value(s, j["source"], member_ptr(ptr, "source"), {});
    auto g = functor_value(s, j["target"], member_ptr(ptr, "target"), {});
    if (!same_groupoid(f.domain(), g.domain()) || !same_groupoid(f.codomain(), g.codomain())) {
      throw Error(Errc::SignatureMismatch, "source and target must share domain and codomain");
    }
    const Groupoid& c = *f.domain();
    const Groupoid& dd = *f.codomain();
    std::vector<std::optional<MorphismId>> comps(c.object_count());
    for (auto& [x, a] : string_map(s, j["components"], member_ptr(ptr, "components"), "\"components\"")) {
      comps[c.object(x).value] = dd.morphism(a);
    }
    std::vector<MorphismId> out;
    for (auto x : c.objects()) {
      if (!comps[x.value]) {
        throw Error(Errc::UnknownId, "no component at object '" + c.name(x) + "'", {c.name(x)});
      }
      out.push_back(*comps[x.value]);
    }
    return NaturalIsomorphism{std::move(f), std::move(g), std::move(out)};
  }

  CatGroupStructure read_catgroup_object(const Source& s, const json& j, const std::string& ptr) {
    check_fields(s, j, ptr, {"kind", "carrier", "tensor", "inv", "unit"}, {"carrier", "tensor", "inv", "unit"});
    auto carrier = groupoid_value(s, j["carrier"], member_ptr(ptr, "carrier"));
    auto tensor = functor_value(s, j["tensor"], member_ptr(ptr, "tensor"), {product(carrier, carrier), carrier});
    auto inv = functor_value(s, j["inv"], member_ptr(ptr, "inv"), {carrier, carrier});
    const ObjectId unit = carrier->object(get_string(s, j, ptr, "unit"));
    return CatGroupStructure(carrier, std::move(tensor), std::move(inv), unit);
  }

  std::map<std::string, std::unique_ptr<Source>> sources_;
  std::set<std::string> active_;
};

// ---------------------------------------------------------------------------
// Printing.

ordered_json groupoid_json(const Groupoid& g) {
  ordered_json j;
  j["kind"] = "groupoid";
  if (g.is_product()) {
    j["construct"] = "product";
    j["factors"] = ordered_json::array({groupoid_json(*g.factors()->left), groupoid_json(*g.factors()->right)});
    return j;
  }
  const auto spec = to_spec(g);
  j["objects"] = spec.objects;
  auto& ms = j["morphisms"] = ordered_json::array();
  for (const auto& m : spec.morphisms) {
    ordered_json e;
    e["id"] = m.id;
    e["src"] = m.src;
    e["tgt"] = m.tgt;
    ms.push_back(std::move(e));
  }
  auto& cs = j["compose"] = ordered_json::array();
  for (const auto& c : spec.compose) cs.push_back({c.first, c.second, c.result});
  auto& ids = j["identities"] = ordered_json::object();
  for (const auto& [x, e] : spec.identities) ids[x] = e;
  auto& invs = j["inverses"] = ordered_json::object();
  for (const auto& [a, b] : spec.inverses) invs[a] = b;
  return j;
}

ordered_json functor_json(const GroupoidMorphism& f, bool with_ends) {
  ordered_json j;
  j["kind"] = "functor";
  if (with_ends) {
    j["domain"] = groupoid_json(*f.domain());
    j["codomain"] = groupoid_json(*f.codomain());
  }
  const Groupoid& d = *f.domain();
  const Groupoid& c = *f.codomain();
  auto& os = j["objects"] = ordered_json::object();
  for (auto x : d.objects()) os[d.name(x)] = c.name(f(x));
  auto& ms = j["morphisms"] = ordered_json::object();
  for (auto a : d.morphisms()) ms[d.name(a)] = c.name(f(a));
  return j;
}

ordered_json natiso_json(const NaturalIsomorphism& s) {
  ordered_json j;
  j["kind"] = "natiso";
  j["source"] = functor_json(s.source, true);
  j["target"] = functor_json(s.target, true);
  const Groupoid& c = *s.source.domain();
  const Groupoid& d = *s.source.codomain();
  auto& cs = j["components"] = ordered_json::object();
  for (auto x : c.objects()) cs[c.name(x)] = d.name(s(x));
  return j;
}

ordered_json catgroup_json(const CatGroupStructure& s) {
  ordered_json j;
  j["kind"] = "catgroup";
  j["carrier"] = groupoid_json(*s.carrier());
  j["tensor"] = functor_json(s.tensor(), false);
  j["inv"] = functor_json(s.inv(), false);
  j["unit"] = s.carrier()->name(s.unit());
  return j;
}

bool is_scalar(const ordered_json& j) { return !j.is_object() && !j.is_array(); }

bool all_scalar(const ordered_json& j) {
  return std::all_of(j.begin(), j.end(), [](const ordered_json& e) { return is_scalar(e); });
}

void emit(const ordered_json& j, std::string& out, int indent, bool inside_array) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (is_scalar(j)) {
    out += j.dump(-1, ' ', false, ordered_json::error_handler_t::strict);
    return;
  }
  if (j.empty()) {
    out += j.is_array() ? "[]" : "{}";
    return;
  }
  if (j.is_array()) {
    if (all_scalar(j)) {
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ", ";
        first = false;
        emit(e, out, indent, true);
      }
      out += ']';
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      emit(j[i], out, indent + 1, true);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
    return;
  }
  if (inside_array && all_scalar(j)) {
    out += '{';
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ", ";
      first = false;
      out += ordered_json(it.key()).dump() + ": ";
      emit(it.value(), out, indent, true);
    }
    out += '}';
    return;
  }
  out += "{\n";
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    out += inner + ordered_json(it.key()).dump() + ": ";
    emit(it.value(), out, indent + 1, false);
    out += i + 1 < j.size() ? ",\n" : "\n";
  }
  out += pad + "}";
}

Document parse_with(std::string text, const std::filesystem::path& base_dir, const std::string& file) {
  Source src;
  src.text = std::move(text);
  src.base_dir = base_dir;
  src.loc = locate(src.text, file);
  Reader reader(file);
  return reader.read_top(src);
}

template <class T>
T narrow(Document doc, const std::filesystem::path& path, std::string_view want) {
  if (auto* v = std::get_if<T>(&doc)) return std::move(*v);
  throw ParseError(1, 1, "expected a " + std::string(want) + " document, found " + std::string(kind_of(doc)),
                   path.string());
}

}  // namespace

std::string_view kind_of(const Document& doc) noexcept {
  switch (doc.index()) {
    case 0: return "groupoid";
    case 1: return "functor";
    case 2: return "natiso";
    default: return "catgroup";
  }
}

Document parse_document(std::string_view text, const std::filesystem::path& base_dir) {
  return parse_with(std::string(text), base_dir, {});
}

Document load_document(const std::filesystem::path& path) {
  return parse_with(read_file(path), path.parent_path(), path.string());
}

std::string print_document(const Document& doc) {
  ordered_json j = std::visit(
      [](const auto& v) -> ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, GroupoidPtr>) {
          return groupoid_json(*v);
        } else if constexpr (std::is_same_v<T, GroupoidMorphism>) {
          return functor_json(v, true);
        } else if constexpr (std::is_same_v<T, NaturalIsomorphism>) {
          return natiso_json(v);
        } else {
          return catgroup_json(v);
        }
      },
      doc);
  std::string out;
  emit(j, out, 0, false);
  out += '\n';
  return out;
}

bool operator==(const Document& a, const Document& b) {
  if (a.index() != b.index()) return false;
  if (auto* g = std::get_if<GroupoidPtr>(&a)) return same_groupoid(*g, std::get<GroupoidPtr>(b));
  if (auto* f = std::get_if<GroupoidMorphism>(&a)) return *f == std::get<GroupoidMorphism>(b);
  if (auto* n = std::get_if<NaturalIsomorphism>(&a)) return *n == std::get<NaturalIsomorphism>(b);
  return std::get<CatGroupStructure>(a) == std::get<CatGroupStructure>(b);
}

GroupoidPtr load_groupoid(const std::filesystem::path& path) {
  return narrow<GroupoidPtr>(load_document(path), path, "groupoid");
}
GroupoidMorphism load_functor(const std::filesystem::path& path) {
  return narrow<GroupoidMorphism>(load_document(path), path, "functor");
}
NaturalIsomorphism load_natiso(const std::filesystem::path& path) {
  return narrow<NaturalIsomorphism>(load_document(path), path, "natiso");
}
CatGroupStructure load_catgroup(const std::filesystem::path& path) {
  return narrow<CatGroupStructure>(load_document(path), path, "catgroup");
}

}  // namespace gpd
