#include "engelgraph/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "engelgraph/numtheory.hpp"
#include "engelgraph/structure.hpp"

#ifndef ENGELGRAPH_DEFAULT_DATA_DIR
#define ENGELGRAPH_DEFAULT_DATA_DIR "data/groups"
#endif

namespace engelgraph {

namespace {

using Images = std::vector<Point>;

Permutation cycle_on(unsigned n) {
  Images im(n);
  for (unsigned i = 0; i < n; ++i) im[i] = static_cast<Point>((i + 1) % n);
  return Permutation(std::move(im));
}

Permutation transposition(unsigned n, unsigned a, unsigned b) {
  Images im(n);
  std::iota(im.begin(), im.end(), Point{0});
  std::swap(im[a], im[b]);
  return Permutation(std::move(im));
}

unsigned primitive_root(unsigned p) {
  auto factors = prime_divisors(p - 1);
  for (unsigned w = 2; w < p; ++w) {
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](std::uint64_t q) { return pow_mod(w, (p - 1) / q, p) != 1; });
    if (ok) return w;
  }
  return 1;  // p = 2
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<Permutation> generators_for(const GroupSpec& spec);

std::vector<Permutation> direct_product_generators(const GroupSpec& spec) {
  require(spec.factors.size() == 2, "direct product needs two factors");
  auto left = generators_for(spec.factors[0]);
  auto right = generators_for(spec.factors[1]);
  const std::size_t m = left.front().degree(), n = right.front().degree();
  require(m + n <= 65535, "direct product degree too large");
  std::vector<Permutation> out;
  for (const auto& g : left) {
    Images im(m + n);
    std::iota(im.begin(), im.end(), Point{0});
    std::copy(g.images().begin(), g.images().end(), im.begin());
    out.emplace_back(std::move(im));
  }
  for (const auto& g : right) {
    Images im(m + n);
    std::iota(im.begin(), im.end(), Point{0});
    for (std::size_t i = 0; i < n; ++i) im[m + i] = static_cast<Point>(m + g(static_cast<Point>(i)));
    out.emplace_back(std::move(im));
  }
  return out;
}

struct FileGroup {
  std::string name;
  std::vector<Permutation> generators;
  std::uint64_t expected_order;
  bool simple;
};

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(byte), '\n'));
}

FileGroup read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path + ": cannot open group file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ":" + std::to_string(line_of(text, e.byte)) + ": parse error: " + e.what());
  }
  auto fail = [&](const std::string& what) { throw std::invalid_argument(path + ": " + what); };
  if (!j.is_object()) fail("top level must be an object");
  for (const char* key : {"name", "degree", "generators", "expected_order"}) {
    if (!j.contains(key)) fail(std::string("missing field \"") + key + "\"");
  }
  if (!j["name"].is_string()) fail("\"name\" must be a string");
  if (!j["degree"].is_number_unsigned()) fail("\"degree\" must be a positive integer");
  if (!j["expected_order"].is_number_unsigned()) fail("\"expected_order\" must be a positive integer");
  if (j.contains("simple") && !j["simple"].is_boolean()) fail("\"simple\" must be a boolean");
  const auto degree = j["degree"].get<std::uint64_t>();
  if (degree < 1 || degree > 65535) fail("\"degree\" out of range");

  const auto& gens = j["generators"];
  if (!gens.is_array() || gens.empty()) fail("\"generators\" must be a nonempty array");
  FileGroup out{j["name"].get<std::string>(), {}, j["expected_order"].get<std::uint64_t>(),
                j.value("simple", false)};
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto& g = gens[k];
    const std::string where = "generator " + std::to_string(k);
    if (!g.is_array()) fail(where + " is not an array");
    if (g.size() != degree) {
      fail(where + " has " + std::to_string(g.size()) + " images, expected " + std::to_string(degree));
    }
    Images im;
    im.reserve(degree);
    for (const auto& v : g) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= degree) fail(where + " has an image out of range");
      im.push_back(static_cast<Point>(v.get<std::uint64_t>()));
    }
    try {
      out.generators.emplace_back(std::move(im));
    } catch (const std::invalid_argument& e) {
      fail(where + ": " + e.what());
    }
  }
  return out;
}

std::string resolve_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute() || std::filesystem::exists(p)) return path;
  return (std::filesystem::path(data_dir()) / p).string();
}

std::vector<Permutation> generators_for(const GroupSpec& spec) {
  const unsigned n = spec.parameter;
  switch (spec.construction) {
    case Construction::Cyclic:
      require(n >= 1, "cyclic group needs n >= 1");
      return {cycle_on(n)};
    case Construction::Dihedral: {
      require(n >= 6 && n % 2 == 0, "dihedral group needs an even order >= 6");
      const unsigned m = n / 2;
      Images reflect(m);
      for (unsigned i = 0; i < m; ++i) reflect[i] = static_cast<Point>((m - i) % m);
      return {cycle_on(m), Permutation(std::move(reflect))};
    }
    case Construction::Symmetric:
      require(n >= 2, "symmetric group needs n >= 2");
      return {cycle_on(n), transposition(n, 0, 1)};
    case Construction::Alternating: {
      require(n >= 3, "alternating group needs n >= 3");
      std::vector<Permutation> gens;
      for (unsigned i = 2; i < n; ++i) {
        Images im(n);
        std::iota(im.begin(), im.end(), Point{0});
        im[0] = 1;
        im[1] = static_cast<Point>(i);
        im[i] = 0;
        gens.emplace_back(std::move(im));
      }
      return gens;
    }
    case Construction::AGL1: {
      require(n >= 3 && is_prime(n), "AGL1(p) needs an odd prime p");
      const unsigned w = primitive_root(n);
      Images scale(n);
      for (unsigned i = 0; i < n; ++i) scale[i] = static_cast<Point>((static_cast<std::uint64_t>(i) * w) % n);
      return {cycle_on(n), Permutation(std::move(scale))};
    }
    case Construction::PSL2: {
      require(n >= 3 && is_prime(n), "PSL2(p) needs an odd prime p");
      // points 0..p-1 of the field and infinity = p
      const unsigned p = n, inf = n;
      const std::uint64_t w2 = static_cast<std::uint64_t>(primitive_root(p)) * primitive_root(p) % p;
      Images shift(p + 1), scale(p + 1), flip(p + 1);
      for (unsigned z = 0; z < p; ++z) {
        shift[z] = static_cast<Point>((z + 1) % p);
        scale[z] = static_cast<Point>(z * w2 % p);
        // z -> -1/z
        flip[z] = static_cast<Point>(z == 0 ? inf : (p - pow_mod(z, p - 2, p)) % p);
      }
      shift[inf] = scale[inf] = static_cast<Point>(inf);
      flip[inf] = 0;
      return {Permutation(std::move(shift)), Permutation(std::move(scale)), Permutation(std::move(flip))};
    }
    case Construction::DirectProduct:
      return direct_product_generators(spec);
    case Construction::File:
      return read_group_file(resolve_path(spec.path)).generators;
  }
  throw std::invalid_argument("unknown construction");
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f = f * i;
  return f;
}

GroupSpec make(std::string name, Construction c, unsigned parameter, std::optional<std::uint64_t> order) {
  GroupSpec s;
  s.name = std::move(name);
  s.construction = c;
  s.parameter = parameter;
  s.expected_order = order;
  return s;
}

bool parse_unsigned(std::string_view text, unsigned& out) {
  if (text.empty() || text.size() > 6) return false;
  unsigned v = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  out = v;
  return true;
}

// "PREFIX<n>" or "PREFIX(<n>)"
bool match_parametric(std::string_view name, std::string_view prefix, unsigned& n) {
  if (name.substr(0, prefix.size()) != prefix) return false;
  std::string_view rest = name.substr(prefix.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
  return parse_unsigned(rest, n);
}

}  // namespace

std::string to_string(Tier tier) {
  switch (tier) {
    case Tier::Fast: return "fast";
    case Tier::Slow: return "slow";
    case Tier::Targeted: return "targeted";
  }
  return "unknown";
}

Tier parse_tier(std::string_view text) {
  if (text == "fast") return Tier::Fast;
  if (text == "slow") return Tier::Slow;
  if (text == "targeted") return Tier::Targeted;
  throw std::invalid_argument("unknown tier: " + std::string(text));
}

GroupSpec cyclic_spec(unsigned n) { return make("C" + std::to_string(n), Construction::Cyclic, n, n); }
GroupSpec dihedral_spec(unsigned order) {
  return make("D" + std::to_string(order), Construction::Dihedral, order, order);
}
GroupSpec symmetric_spec(unsigned n) {
  return make("S" + std::to_string(n), Construction::Symmetric, n, n <= 20 ? std::optional(factorial(n)) : std::nullopt);
}
GroupSpec alternating_spec(unsigned n) {
  return make("A" + std::to_string(n), Construction::Alternating, n,
              n <= 20 ? std::optional(factorial(n) / 2) : std::nullopt);
}
GroupSpec agl1_spec(unsigned p) {
  return make("AGL1(" + std::to_string(p) + ")", Construction::AGL1, p, std::uint64_t{p} * (p - 1));
}
GroupSpec psl2_spec(unsigned p) {
  return make("PSL2(" + std::to_string(p) + ")", Construction::PSL2, p, std::uint64_t{p} * (std::uint64_t{p} * p - 1) / 2);
}
GroupSpec direct_product_spec(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.name = a.name + "x" + b.name;
  s.construction = Construction::DirectProduct;
  if (a.expected_order && b.expected_order) s.expected_order = *a.expected_order * *b.expected_order;
  s.tier = std::max(a.tier, b.tier);
  s.factors = {std::move(a), std::move(b)};
  return s;
}
GroupSpec file_spec(std::string name, std::string path, std::uint64_t expected_order, Tier tier) {
  GroupSpec s = make(std::move(name), Construction::File, 0, expected_order);
  s.path = std::move(path);
  s.tier = tier;
  return s;
}

Group build(const GroupSpec& spec, const EnumerationOptions& options) {
  if (spec.construction == Construction::File) {
    Group g = load_group_file(resolve_path(spec.path), options);
    if (spec.expected_order && g.order() != *spec.expected_order) {
      throw std::invalid_argument(spec.name + ": order " + std::to_string(g.order()) + ", expected " +
                                  std::to_string(*spec.expected_order));
    }
    return g.name() == spec.name ? g : g.renamed(spec.name);
  }
  Group g = Group::enumerate(generators_for(spec), spec.name, options);
  if (spec.expected_order && g.order() != *spec.expected_order) {
    throw std::invalid_argument(spec.name + ": order " + std::to_string(g.order()) + ", expected " +
                                std::to_string(*spec.expected_order));
  }
  return g;
}

Group load_group_file(const std::string& path, const EnumerationOptions& options) {
  FileGroup f = read_group_file(path);
  Group g = Group::enumerate(std::move(f.generators), f.name, options);
  if (g.order() != f.expected_order) {
    throw std::invalid_argument(path + ": enumerated order " + std::to_string(g.order()) + " but expected_order is " +
                                std::to_string(f.expected_order));
  }
  if (f.simple && !is_simple(g)) throw std::invalid_argument(path + ": marked simple but is not nonabelian simple");
  return g;
}

std::string data_dir() {
  const char* env = std::getenv("ENGELGRAPH_DATA_DIR");
  if (env != nullptr && *env != '\0') return env;
  return ENGELGRAPH_DEFAULT_DATA_DIR;
}

std::vector<GroupSpec> standard_catalog() {
  std::vector<GroupSpec> c;
  for (unsigned n = 2; n <= 12; ++n) c.push_back(cyclic_spec(n));
  for (unsigned n : {8u, 10u, 12u}) c.push_back(dihedral_spec(n));
  c.push_back(file_spec("Q8", "q8.json", 8));
  for (unsigned n = 3; n <= 6; ++n) c.push_back(symmetric_spec(n));
  for (unsigned n = 4; n <= 7; ++n) c.push_back(alternating_spec(n));
  c.push_back(agl1_spec(5));
  c.push_back(agl1_spec(7));
  c.push_back(file_spec("SL(2,3)", "sl2_3.json", 24));
  c.push_back(direct_product_spec(cyclic_spec(2), symmetric_spec(4)));
  for (unsigned p : {5u, 7u, 11u, 13u}) c.push_back(psl2_spec(p));
  c.push_back(file_spec("PSL2(4)", "psl2_4.json", 60));
  c.push_back(file_spec("PSL2(8)", "psl2_8.json", 504));
  c.push_back(file_spec("PSL2(9)", "psl2_9.json", 360));
  c.push_back(file_spec("AGL(3,2)", "agl3_2.json", 1344));
  c.push_back(file_spec("ASL(2,4)", "asl2_4.json", 960));
  c.push_back(file_spec("7^2:(3xDic3)", "f49_3xdic3.json", 1764));
  c.push_back(file_spec("M11", "m11.json", 7920, Tier::Slow));
  c.push_back(file_spec("M12", "m12.json", 95040, Tier::Slow));
  c.push_back(file_spec("Sz(8)", "sz8.json", 29120, Tier::Targeted));
  return c;
}

std::vector<GroupSpec> catalog_tier(Tier tier) {
  std::vector<GroupSpec> out;
  for (auto& s : standard_catalog()) {
    if (s.tier == tier) out.push_back(std::move(s));
  }
  return out;
}

std::optional<GroupSpec> find_spec(std::string_view name) {
  for (auto& s : standard_catalog()) {
    if (s.name == name) return s;
  }
  unsigned n = 0;
  if (match_parametric(name, "AGL1", n)) return agl1_spec(n);
  if (match_parametric(name, "PSL2", n)) return psl2_spec(n);
  if (match_parametric(name, "Alt", n) || match_parametric(name, "A", n)) return alternating_spec(n);
  if (match_parametric(name, "Sym", n) || match_parametric(name, "S", n)) return symmetric_spec(n);
  if (match_parametric(name, "C", n)) return cyclic_spec(n);
  if (match_parametric(name, "D", n)) return dihedral_spec(n);
  return std::nullopt;
}

Group resolve_group(const std::string& name_or_path, const EnumerationOptions& options) {
  if (auto spec = find_spec(name_or_path)) return build(*spec, options);
  if (std::filesystem::is_regular_file(name_or_path)) return load_group_file(name_or_path, options);
  throw std::invalid_argument("unknown group or missing file: " + name_or_path);
}

}  // namespace engelgraph
