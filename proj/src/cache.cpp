#include "camon/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "camon/errors.hpp"

namespace camon {

namespace {

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string monoid_cache_path(const std::string& dir, const FiniteGroup& g,
                              int q) {
  std::ostringstream name;
  name << "end_" << std::hex << g.content_hash() << "_a" << std::dec << q
       << ".camcache";
  return (std::filesystem::path(dir) / name.str()).string();
}

void save_ca_monoid(const std::string& dir, const CAMonoid& monoid) {
  std::filesystem::create_directories(dir);
  std::ostringstream payload;
  payload << "camon-end-cache 1\n";
  payload << std::hex << monoid.group->content_hash() << std::dec << ' '
          << monoid.q << ' ' << monoid.elements.size() << '\n';
  payload << monoid.unit_indices.size();
  for (std::uint32_t u : monoid.unit_indices) payload << ' ' << u;
  payload << '\n';
  payload << monoid.composition.size();
  for (std::uint32_t c : monoid.composition) payload << ' ' << c;
  payload << '\n';
  const std::string body = payload.str();

  std::ofstream out(monoid_cache_path(dir, *monoid.group, monoid.q),
                    std::ios::trunc);
  out << "hash " << std::hex << fnv1a(body) << std::dec << '\n' << body;
}

std::optional<CAMonoid> load_ca_monoid(const std::string& dir,
                                       const FiniteGroup& g, int q) {
  std::ifstream in(monoid_cache_path(dir, g, q));
  if (!in) return std::nullopt;
  std::string word;
  std::uint64_t stored_hash = 0;
  if (!(in >> word) || word != "hash" || !(in >> std::hex >> stored_hash))
    return std::nullopt;
  in >> std::dec;
  std::string body((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (!body.empty() && body.front() == '\n') body.erase(0, 1);
  if (fnv1a(body) != stored_hash) return std::nullopt;  // corrupted

  std::istringstream parse(body);
  std::string magic;
  int version = 0;
  std::getline(parse, magic);
  {
    std::istringstream header(magic);
    header >> magic >> version;
    if (magic != "camon-end-cache" || version != 1) return std::nullopt;
  }
  std::uint64_t ghash = 0;
  int aq = 0;
  std::size_t count = 0;
  parse >> std::hex >> ghash >> std::dec >> aq >> count;
  if (ghash != g.content_hash() || aq != q) return std::nullopt;

  CAMonoid monoid;
  monoid.group = &g;
  monoid.q = q;
  monoid.elements.reserve(count);
  const ShiftSpace space(g, q);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<std::uint8_t> rule(space.config_count);
    std::size_t c = code;
    for (std::int64_t i = 0; i < space.config_count; ++i) {
      rule[i] = static_cast<std::uint8_t>(c % q);
      c /= q;
    }
    monoid.elements.push_back(make_ca(g, q, std::move(rule)));
  }
  std::size_t nunits = 0;
  parse >> nunits;
  monoid.unit_indices.resize(nunits);
  for (std::size_t i = 0; i < nunits; ++i) parse >> monoid.unit_indices[i];
  std::size_t ntable = 0;
  parse >> ntable;
  monoid.composition.resize(ntable);
  for (std::size_t i = 0; i < ntable; ++i) parse >> monoid.composition[i];
  if (!parse) return std::nullopt;
  return monoid;
}

CAMonoid load_or_enumerate_end(const std::string& dir, const FiniteGroup& g,
                               int q, const EndBudget& budget, int workers) {
  if (!dir.empty())
    if (auto cached = load_ca_monoid(dir, g, q)) return std::move(*cached);
  CAMonoid monoid = enumerate_end(g, q, budget, workers);
  if (!dir.empty()) save_ca_monoid(dir, monoid);
  return monoid;
}

}  // namespace camon
