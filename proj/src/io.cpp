#include "sadic/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sadic {

Substitution substitution_from_json(const Json& j) {
  const std::string name = j.value("name", std::string("sigma"));
  const Json& images = j.at("images");
  std::vector<Word> out;
  if (images.is_array()) {
    for (const auto& w : images) out.push_back(parse_word(w.get<std::string>()));
  } else if (images.is_object()) {
    const std::size_t n = j.contains("alphabet_size") ? j.at("alphabet_size").get<std::size_t>() : images.size();
    for (std::size_t a = 0; a < n; ++a) {
      const auto key = std::to_string(a);
      if (!images.contains(key)) throw std::invalid_argument(name + ": no image for letter " + key);
      out.push_back(parse_word(images.at(key).get<std::string>()));
    }
    if (images.size() != n) throw std::invalid_argument(name + ": images outside the alphabet");
  } else {
    throw std::invalid_argument(name + ": images must be an array or an object");
  }
  if (j.contains("alphabet_size") && j.at("alphabet_size").get<std::size_t>() != out.size())
    throw std::invalid_argument(name + ": alphabet_size does not match the images");
  return Substitution(name, std::move(out));
}

Json to_json(const Substitution& s) {
  Json images = Json::object();
  for (std::size_t a = 0; a < s.alphabet_size(); ++a)
    images[std::to_string(a)] = to_string(s.image(static_cast<Letter>(a)));
  return {{"name", s.name()}, {"alphabet_size", s.alphabet_size()}, {"images", images}};
}

SubstitutionSet substitution_set_from_json(const Json& j) {
  const Json& list = j.is_object() ? j.at("substitutions") : j;
  if (!list.is_array()) throw std::invalid_argument("substitutions must be an array");
  std::vector<Substitution> subs;
  for (const auto& s : list) subs.push_back(substitution_from_json(s));
  return SubstitutionSet(std::move(subs));
}

Json to_json(const SubstitutionSet& set) {
  Json list = Json::array();
  for (const auto& s : set) list.push_back(to_json(s));
  return {{"substitutions", list}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in, nullptr, true, true);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

std::string preset_path(const std::string& name) {
  if (name.find('/') != std::string::npos || name.ends_with(".json")) return name;
  std::vector<std::string> dirs;
  if (const char* env = std::getenv("SADIC_PRESETS")) dirs.emplace_back(env);
#ifdef SADIC_DEFAULT_PRESETS
  dirs.emplace_back(SADIC_DEFAULT_PRESETS);
#endif
  dirs.emplace_back("presets");
  for (const auto& d : dirs) {
    const std::filesystem::path p = std::filesystem::path(d) / (name + ".json");
    if (std::filesystem::exists(p)) return p.string();
  }
  throw std::invalid_argument("unknown preset " + name);
}

Json load_preset(const std::string& name) { return read_json_file(preset_path(name)); }

Vec<Rational> parse_direction(const Algorithm& alg, const std::string& text) {
  const std::size_t d = alg.dimension();
  Vec<Rational> x;
  if (text.starts_with("eigen:")) {
    const auto ids = DirectiveSequence::parse_names(alg.set(), text.substr(6));
    const IntMatrix m = partial_product(alg, ids, 0, ids.size());
    for (double c : perron_direction(m).mid()) x.emplace_back(c);
  } else if (text.starts_with("random:")) {
    std::mt19937_64 rng(std::stoull(text.substr(7)));
    for (double c : sample_simplex(rng, d)) x.emplace_back(c);
  } else {
    x = parse_rational_list(text);
  }
  if (x.size() != d) throw std::invalid_argument("direction needs " + std::to_string(d) + " coordinates");
  for (const auto& c : x)
    if (c <= 0) throw std::invalid_argument("direction coordinates must be positive");
  return normalize(x);
}

std::vector<Ball> balls_from_json(const Json& j) {
  std::vector<Ball> out;
  for (const auto& b : j) {
    const auto& c = b.at("center");
    out.push_back(Ball::from_decimal(c.at(0).get<std::string>(), c.at(1).get<std::string>(),
                                     b.at("radius").get<std::string>()));
  }
  return out;
}

}  // namespace sadic
