#include "relufibre/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "relufibre/error.hpp"
#include "relufibre/json_io.hpp"

namespace relufibre::cli {

namespace {

struct Flags {
  std::optional<std::uint64_t> seed;
  std::size_t count = 1000;
  bool count_given = false;
  std::string bbox = "-6,-6,6,6";
  std::size_t grid = 200;
  double opacity = 0.25;
  std::optional<std::size_t> width_cap;
  std::string format = "json";
  bool rows_only = false;
};

class Session {
 public:
  Session(std::istream& in, std::ostream& out, const Flags& flags)
      : in_(in), out_(out), flags_(flags) {}

  Parameter load(const std::string& source) {
    std::string text;
    if (source == "-") {
      if (stdin_used_) throw Error(ErrorCode::Schema, "standard input used twice");
      stdin_used_ = true;
      std::ostringstream ss;
      ss << in_.rdbuf();
      text = ss.str();
    } else if (!source.empty() && source.front() == '{') {
      text = source;
    } else {
      std::ifstream file(source);
      if (!file) throw Error(ErrorCode::Schema, "cannot read '" + source + "'");
      std::ostringstream ss;
      ss << file.rdbuf();
      text = ss.str();
    }
    try {
      return parse_parameter(text);
    } catch (const Error& e) {
      throw Error(e.code(), source + ": " + e.what());
    }
  }

  void emit(const Json& j) {
    out_ << (flags_.format == "compact" ? j.dump() : j.dump(2)) << '\n';
  }

  WidthCaps caps() const {
    WidthCaps caps;
    if (flags_.width_cap) caps.sweep = caps.flips = *flags_.width_cap;
    return caps;
  }

  std::uint64_t seed() const {
    if (!flags_.seed) throw Error(ErrorCode::Precondition, "this command requires --seed");
    return *flags_.seed;
  }

  const Flags& flags() const { return flags_; }
  std::ostream& out() { return out_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  const Flags& flags_;
  bool stdin_used_ = false;
};

RatVec parse_point(const std::string& text) {
  RatVec x;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) x.push_back(Rat::parse(item));
  return x;
}

std::vector<std::size_t> parse_subset(const std::string& text) {
  std::vector<std::size_t> s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit) || std::stoul(item) < 1)
      throw Error(ErrorCode::Schema, "subset entry '" + item + "' is not a one-based index");
    s.push_back(std::stoul(item) - 1);
  }
  return s;
}

BoundingBox parse_bbox(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    double d = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0') throw Error(ErrorCode::Schema, "bad --bbox entry '" + item + "'");
    v.push_back(d);
  }
  if (v.size() != 4) throw Error(ErrorCode::Schema, "--bbox needs x0,y0,x1,y1");
  return {v[0], v[1], v[2], v[3]};
}

int worst(int a, int b) { return std::max(a, b); }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact decisions about the fibres of shallow ReLU network parameters", "relu-fiber"};
  app.require_subcommand(1);
  Flags flags;
  std::vector<std::string> inputs;
  std::string single;
  std::string extra;
  std::vector<std::string> extras;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", flags.format, "json (indented) or compact")
        ->check(CLI::IsMember({"json", "compact"}));
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--width-cap", flags.width_cap, "Refuse exponential sweeps above this n");
  };
  auto many = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("params", inputs, "Parameter files, '-' or inline JSON")->required();
    add_format(sub);
    return sub;
  };
  auto pair = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("params", inputs, "Two parameters")->required()->expected(2);
    add_format(sub);
    return sub;
  };

  auto* minform = many("minform", "Minimal form of single-output parameters");
  auto* reduce = many("reduce", "0-factor reduction");
  auto* rank = many("rank", "0-factor rank");
  auto* stab = many("stab", "Stabilizer in H_n");
  stab->add_flag("--rows", flags.rows_only, "Stabilizer of (A, b) only");
  auto* generic = many("generic", "Genericity certificate");
  add_cap(generic);
  auto* verdict_cmd = many("verdict", "Is the fibre a single H_n orbit?");
  add_cap(verdict_cmd);
  auto* flipsets = many("flipsets", "All hidden-symmetry flip subsets");
  add_cap(flipsets);

  auto* equiv = pair("equiv", "Functional equivalence with certificate");
  auto* oracle = pair("oracle1d", "Exact 1-D equality oracle");
  auto* sample_equal = pair("sample-equal", "Compare at seeded integer points");
  sample_equal->add_option("--seed", flags.seed)->required();
  sample_equal->add_option("--count", flags.count);

  auto* orbit = app.add_subcommand("orbit", "Orbit membership (two inputs) or orbit sample (one input)");
  orbit->add_option("params", inputs)->required()->expected(1, 2);
  orbit->add_option("--seed", flags.seed);
  orbit->add_option("--count", flags.count)->each([&](const std::string&) { flags.count_given = true; });
  add_format(orbit);

  auto* flip_cmd = app.add_subcommand("flip", "Flip the rows of a neuron subset");
  flip_cmd->add_option("param", single, "Parameter file, '-' or inline JSON")->required();
  flip_cmd->add_option("subset", extra, "One-based indices, e.g. 1,2,3")->required();
  add_format(flip_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate at points");
  eval_cmd->add_option("param", single, "Parameter file, '-' or inline JSON")->required();
  eval_cmd->add_option("points", extras, "Points such as 3,0 or 1/2,-1")->required();
  add_format(eval_cmd);

  auto* plot = app.add_subcommand("plot", "SVG of the bent hyperplane arrangement");
  plot->add_option("param", single, "Parameter file, '-' or inline JSON")->required();
  plot->add_option("--bbox", flags.bbox, "x0,y0,x1,y1");
  plot->add_option("--grid", flags.grid)->check(CLI::PositiveNumber);
  plot->add_option("--opacity", flags.opacity)->check(CLI::Range(0.0, 1.0));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "relu-fiber: " << e.what() << '\n';
    return kUsage;
  }

  if (!single.empty()) inputs.push_back(single);
  Session s(in, out, flags);
  try {
    int code = kSuccess;
    if (minform->parsed()) {
      for (const auto& src : inputs) s.emit(to_json(minimal_form(s.load(src))));
    } else if (reduce->parsed()) {
      for (const auto& src : inputs) s.emit(to_json(zero_factor_reduce(s.load(src))));
    } else if (rank->parsed()) {
      for (const auto& src : inputs) {
        Json j;
        j["rank"] = zero_factor_rank(s.load(src));
        s.emit(j);
      }
    } else if (stab->parsed()) {
      for (const auto& src : inputs) {
        auto theta = s.load(src);
        s.emit(to_json(flags.rows_only ? stabilizer_rows(theta) : stabilizer(theta)));
      }
    } else if (generic->parsed()) {
      for (const auto& src : inputs) {
        auto result = genericity_certificate(s.load(src), s.caps().sweep);
        Json j;
        j["certified"] = !result.has_value();
        if (result) j["violation"] = to_json(*result);
        s.emit(j);
        code = worst(code, result ? kNegative : kSuccess);
      }
    } else if (verdict_cmd->parsed()) {
      for (const auto& src : inputs) {
        auto v = verdict(s.load(src), s.caps());
        s.emit(to_json(v));
        code = worst(code, v.state == FibreVerdict::State::Isomorphic      ? kSuccess
                           : v.state == FibreVerdict::State::NotIsomorphic ? kNegative
                                                                           : kUnknown);
      }
    } else if (flipsets->parsed()) {
      for (const auto& src : inputs) {
        Json sets = Json::array();
        for (const auto& subset : flip_subsets(s.load(src), s.caps().flips)) {
          Json one = Json::array();
          for (auto i : subset) one.push_back(i + 1);
          sets.push_back(std::move(one));
        }
        Json j;
        j["subsets"] = std::move(sets);
        s.emit(j);
      }
    } else if (equiv->parsed()) {
      auto result = equivalent(s.load(inputs[0]), s.load(inputs[1]));
      s.emit(to_json(result));
      code = result.equivalent ? kSuccess : kNegative;
    } else if (oracle->parsed()) {
      const bool eq = exact_equal_1d(s.load(inputs[0]), s.load(inputs[1]));
      Json j;
      j["equal"] = eq;
      s.emit(j);
      code = eq ? kSuccess : kNegative;
    } else if (sample_equal->parsed()) {
      auto result = equal_on_samples(s.load(inputs[0]), s.load(inputs[1]), flags.count, s.seed());
      s.emit(to_json(result));
      code = result.equal ? kSuccess : kNegative;
    } else if (orbit->parsed()) {
      auto theta = s.load(inputs[0]);
      if (inputs.size() == 2) {
        auto g = same_orbit(theta, s.load(inputs[1]));
        Json j;
        j["same_orbit"] = g.has_value();
        if (g) j["element"] = to_json(*g);
        s.emit(j);
        code = g ? kSuccess : kNegative;
      } else {
        if (!flags.count_given) throw Error(ErrorCode::Precondition, "orbit sampling requires --count");
        Json list = Json::array();
        for (const auto& p : orbit_sample(theta, flags.count, s.seed())) list.push_back(to_json(p));
        s.emit(list);
      }
    } else if (flip_cmd->parsed()) {
      s.emit(to_json(flip(s.load(inputs[0]), parse_subset(extra))));
    } else if (eval_cmd->parsed()) {
      auto theta = s.load(inputs[0]);
      Json results = Json::array();
      for (const auto& p : extras) {
        Json j;
        auto x = parse_point(p);
        j["x"] = to_json(x);
        j["y"] = to_json(eval(theta, x));
        Json pattern = Json::array();
        for (int sign : activation_pattern(theta, x))
          pattern.push_back(sign > 0 ? "+" : (sign < 0 ? "-" : "0"));
        j["pattern"] = std::move(pattern);
        results.push_back(std::move(j));
      }
      s.emit(results);
    } else if (plot->parsed()) {
      PlotOptions opt;
      opt.bbox = parse_bbox(flags.bbox);
      opt.grid = flags.grid;
      opt.opacity = flags.opacity;
      out << arrangement_svg(s.load(inputs[0]), opt);
    }
    return code;
  } catch (const Error& e) {
    err << "relu-fiber: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::WidthCapExceeded ? kWidthCap : kInput;
  }
}

}  // namespace relufibre::cli
