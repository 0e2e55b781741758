#include "fuzzyskew/asset_io.hpp"

#include <fstream>
#include <sstream>

#include "fuzzyskew/distributions.hpp"
#include "fuzzyskew/error.hpp"
#include "json.hpp"

namespace fuzzyskew {

namespace {

using nlohmann::json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& obj, const std::string& key, const std::string& at) {
  if (!obj.is_object()) throw ParseError(at, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(at + "/" + key, "missing field");
  return *it;
}

double number(const json& v, const std::string& at) {
  if (!v.is_number()) throw ParseError(at, "expected a number");
  return v.get<double>();
}

std::vector<BreakPoint> points(const json& arr, const std::string& at) {
  if (!arr.is_array()) throw ParseError(at, "expected an array of [x, alpha] pairs");
  std::vector<BreakPoint> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string here = at + "/" + std::to_string(i);
    const json& p = arr[i];
    if (!p.is_array() || p.size() != 2) throw ParseError(here, "expected an [x, alpha] pair");
    out.push_back({number(p[0], here + "/0"), number(p[1], here + "/1")});
  }
  return out;
}

std::vector<double> numbers(const json& arr, const std::string& at) {
  if (!arr.is_array()) throw ParseError(at, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(number(arr[i], at + "/" + std::to_string(i)));
  return out;
}

QuantileSpec quantile_spec(const json& obj, const std::string& at) {
  QuantileSpec spec;
  const json& fam = field(obj, "family", at);
  if (fam == "beta") {
    spec.family = Family::beta;
    spec.shape1 = number(field(obj, "shape1", at), at + "/shape1");
    spec.shape2 = number(field(obj, "shape2", at), at + "/shape2");
  } else if (fam == "uniform") {
    spec.family = Family::uniform;
  } else {
    throw ParseError(at + "/family", "expected \"beta\" or \"uniform\"");
  }
  const auto support = numbers(field(obj, "support", at), at + "/support");
  if (support.size() != 2) throw ParseError(at + "/support", "expected [lo, hi]");
  spec.support = {support[0], support[1]};
  try {
    spec.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(at, e.what());
  }
  return spec;
}

FuzzyNumber entry_number(const json& e, const std::string& at) {
  const json& type = field(e, "type", at);
  try {
    if (type == "piecewise") {
      const auto left = points(field(e, "left", at), at + "/left");
      const auto right = points(field(e, "right", at), at + "/right");
      return make_piecewise_linear(left, right);
    }
    if (type == "quantile") {
      std::size_t grid = kDefaultQuantileGrid;
      if (e.contains("grid")) {
        const json& g = e["grid"];
        if (!g.is_number_integer() || g.get<long long>() < 2) throw ParseError(at + "/grid", "expected an integer >= 2");
        grid = g.get<std::size_t>();
      }
      return fuzzy_from_quantiles(quantile_spec(field(e, "left", at), at + "/left"),
                                  quantile_spec(field(e, "right", at), at + "/right"), grid);
    }
    if (type == "compact") {
      const auto x = numbers(field(e, "x", at), at + "/x");
      const auto a = numbers(field(e, "alpha", at), at + "/alpha");
      return from_compact(x, a);
    }
  } catch (const InvalidArgument& err) {
    throw ParseError(at, err.what());
  }
  throw ParseError(at + "/type", "expected \"piecewise\", \"quantile\" or \"compact\"");
}

}  // namespace

FuzzyNumber from_compact(std::span<const double> x, std::span<const double> alpha) {
  if (x.size() != alpha.size()) throw InvalidArgument("compact fuzzy number: x and alpha lengths differ");
  std::size_t first = alpha.size(), last = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 1.0) {
      first = std::min(first, i);
      last = i;
    }
  }
  if (first == alpha.size()) throw InvalidArgument("compact fuzzy number: no alpha = 1 apex");
  for (std::size_t i = first; i <= last; ++i)
    if (alpha[i] != 1.0) throw InvalidArgument("compact fuzzy number: alpha = 1 entries must be contiguous");
  for (std::size_t i = last + 1; i < alpha.size(); ++i)
    if (!(alpha[i] < alpha[i - 1]))
      throw InvalidArgument("compact fuzzy number: alpha must decrease strictly after the apex");

  std::vector<BreakPoint> left, right;
  for (std::size_t i = 0; i <= first; ++i) left.push_back({x[i], alpha[i]});
  for (std::size_t i = last; i < alpha.size(); ++i) right.push_back({x[i], alpha[i]});
  return make_piecewise_linear(left, right);
}

std::vector<NamedFuzzyNumber> parse_assets(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_col(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
  }

  const json* entries = &doc;
  std::string base;
  if (doc.is_object()) {
    entries = &field(doc, "assets", "");
    base = "/assets";
  }
  if (!entries->is_array()) throw ParseError(base.empty() ? "/" : base, "expected an array of assets");
  if (entries->empty()) throw ParseError(base.empty() ? "/" : base, "no assets");

  std::vector<NamedFuzzyNumber> out;
  for (std::size_t i = 0; i < entries->size(); ++i) {
    const std::string at = base + "/" + std::to_string(i);
    const json& e = (*entries)[i];
    std::string name = "asset" + std::to_string(i + 1);
    if (e.is_object() && e.contains("name")) {
      if (!e["name"].is_string()) throw ParseError(at + "/name", "expected a string");
      name = e["name"].get<std::string>();
    }
    out.push_back({std::move(name), entry_number(e, at)});
  }
  return out;
}

std::vector<NamedFuzzyNumber> load_assets(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_assets(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ":" + e.location(), e.detail());
  }
}

std::string write_assets(std::span<const NamedFuzzyNumber> assets) {
  json list = json::array();
  for (const auto& a : assets) {
    auto side = [](const AlphaCurve& c) {
      json pts = json::array();
      for (std::size_t i = 0; i < c.size(); ++i) pts.push_back({c.xs()[i], c.alphas()[i]});
      return pts;
    };
    list.push_back({{"name", a.name},
                    {"type", "piecewise"},
                    {"left", side(a.number.lower())},
                    {"right", side(a.number.upper())}});
  }
  return json{{"assets", list}}.dump(2) + "\n";
}

}  // namespace fuzzyskew
