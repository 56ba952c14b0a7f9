#include "ultrahom/tower.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <openssl/evp.h>

#include <json.hpp>

#include "ultrahom/error.hpp"
#include "ultrahom/perm_json.hpp"

namespace ultrahom {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr))
    throw InternalError("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

namespace {

constexpr std::size_t kBaseDegree = 3;

nlohmann::json level_record(const TowerLevel& L, const std::string& below_hash) {
  nlohmann::json j{{"format_version", kTowerFormatVersion},
                   {"level", L.index},
                   {"degree", L.group.degree()},
                   {"generators", L.group.generators()},
                   {"symmetric", true},
                   {"below_hash", below_hash}};
  if (L.elements) j["elements"] = L.elements->realization();
  return j;
}

std::string record_hash(const nlohmann::json& record) {
  nlohmann::json copy = record;
  copy.erase("content_hash");
  return sha256_hex(copy.dump());
}

TowerLevel make_level(std::size_t index, std::size_t degree, const Caps& caps) {
  TowerLevel L;
  L.index = index;
  L.group = PermGroup::symmetric(degree);
  if (index <= 1)
    L.elements = FiniteGroup::from_permutations(degree, L.group.generators(), caps.enumeration,
                                                "G" + std::to_string(index));
  return L;
}

std::optional<TowerLevel> load_level(const std::filesystem::path& file, std::size_t index, std::size_t degree,
                                     const std::string& below_hash, std::string& problem) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("format_version").get<int>() != kTowerFormatVersion) {
      problem = "format version " + j.at("format_version").dump();
      return std::nullopt;
    }
    if (j.at("content_hash").get<std::string>() != record_hash(j)) {
      problem = "content hash mismatch";
      return std::nullopt;
    }
    if (j.at("below_hash").get<std::string>() != below_hash) {
      problem = "hash of the level below does not match";
      return std::nullopt;
    }
    if (j.at("level").get<std::size_t>() != index || j.at("degree").get<std::size_t>() != degree) {
      problem = "level or degree mismatch";
      return std::nullopt;
    }
    TowerLevel L;
    L.index = index;
    L.group = PermGroup::symmetric(degree);
    if (j.at("generators").get<std::vector<Perm>>() != L.group.generators()) {
      problem = "generators differ";
      return std::nullopt;
    }
    if (index <= 1) {
      auto elements = j.at("elements").get<std::vector<Perm>>();
      if (BigInt(elements.size()) != factorial(degree)) {
        problem = "element count is wrong";
        return std::nullopt;
      }
      L.elements = FiniteGroup::from_elements(std::move(elements), "G" + std::to_string(index));
    }
    L.content_hash = j.at("content_hash").get<std::string>();
    L.from_cache = true;
    return L;
  } catch (const std::exception& e) {
    problem = e.what();
    return std::nullopt;
  }
}

void store_level(const std::filesystem::path& file, TowerLevel& L, const std::string& below_hash) {
  nlohmann::json j = level_record(L, below_hash);
  L.content_hash = record_hash(j);
  j["content_hash"] = L.content_hash;
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cannot write cache file " + tmp.string());
    out << j.dump() << '\n';
    if (!out) throw InputError("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

bool check_up_embedding(const Tower& t, std::size_t n) {
  const FiniteGroup& G = t.finite(n);
  std::mt19937 rng(static_cast<unsigned>(n) + 17);
  std::vector<Elem> sample;
  for (Elem g : G.generating_set()) sample.push_back(g);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(G.order() - 1));
  for (int i = 0; i < 20; ++i) sample.push_back(pick(rng));
  for (Elem g : sample) {
    const Perm& pg = G.realization()[g];
    Perm up = t.up(n, pg);
    if (up.order() != pg.order()) return false;
    if (!pg.is_identity() && up.fixed_point_count() != 0) return false;
    for (Elem h : sample)
      if (compose(up, t.up(n, G.realization()[h])) != t.up(n, G.realization()[G.mul(g, h)])) return false;
  }
  return true;
}

}  // namespace

Tower::Tower(std::size_t max_level, TowerOptions options) {
  if (max_level > 2) throw InputError("the tower stops at level 2 (level 3 would be Sym(720!))");
  cache_dir_ = options.cache_dir;
  if (!cache_dir_)
    if (const char* env = std::getenv("ULTRAHOM_CACHE"); env && *env) cache_dir_ = std::filesystem::path(env);
  if (cache_dir_) {
    std::error_code ec;
    std::filesystem::create_directories(*cache_dir_, ec);
    if (!std::filesystem::is_directory(*cache_dir_))
      throw InputError("cache directory " + cache_dir_->string() + " cannot be created");
    std::filesystem::path probe = *cache_dir_ / ".write-test";
    std::ofstream(probe) << "ok";
    if (!std::filesystem::exists(probe))
      throw InputError("cache directory " + cache_dir_->string() + " is not writable");
    std::filesystem::remove(probe, ec);
  }

  std::string below_hash;
  std::size_t degree = kBaseDegree;
  for (std::size_t n = 0; n <= max_level; ++n) {
    std::optional<TowerLevel> L;
    std::filesystem::path file;
    if (cache_dir_) {
      file = *cache_dir_ / ("level" + std::to_string(n) + ".json");
      std::string problem;
      if (std::filesystem::exists(file)) {
        L = load_level(file, n, degree, below_hash, problem);
        if (!L) warnings_.push_back("cache file " + file.string() + " rejected (" + problem + "); rebuilding");
      }
    }
    if (!L) {
      L = make_level(n, degree, options.caps);
      if (cache_dir_) {
        store_level(file, *L, below_hash);
      } else {
        L->content_hash = record_hash(level_record(*L, below_hash));
      }
    }
    below_hash = L->content_hash;
    if (L->elements) degree = L->elements->order();
    levels_.push_back(std::move(*L));
  }
  for (std::size_t n = 0; n + 1 <= max_level; ++n) levels_[n].up_embedding_checked = check_up_embedding(*this, n);
}

const TowerLevel& Tower::level(std::size_t n) const {
  if (n >= levels_.size()) throw InputError("level " + std::to_string(n) + " has not been built");
  return levels_[n];
}

const FiniteGroup& Tower::finite(std::size_t n) const {
  const TowerLevel& L = level(n);
  if (!L.elements) throw InputError("level " + std::to_string(n) + " is not enumerated");
  return *L.elements;
}

Elem Tower::index_of(std::size_t n, const Perm& g) const {
  auto i = finite(n).index_of(g);
  if (!i) throw InputError("permutation " + g.to_string() + " is not an element of level " + std::to_string(n));
  return *i;
}

Perm Tower::up(std::size_t n, const Perm& g) const {
  const FiniteGroup& G = finite(n);
  Elem gi = index_of(n, g);
  std::vector<Point> img(G.order());
  for (Elem a = 0; a < G.order(); ++a) img[a] = G.mul(gi, a);
  return Perm::unchecked(std::move(img));
}

Perm Tower::lift(std::size_t from, std::size_t to, const Perm& g) const {
  if (to < from) throw InputError("cannot lift downwards");
  Perm x = g;
  for (std::size_t n = from; n < to; ++n) x = up(n, x);
  return x;
}

}  // namespace ultrahom
