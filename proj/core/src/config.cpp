// Copyright 2026 The blochdense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blochdense/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "blochdense/error.hpp"
#include "blochdense/state_file.hpp"
#include "text.hpp"

namespace blochdense {
namespace {

constexpr Quantity kAllQuantities[] = {Quantity::kDecoded, Quantity::kLocalA, Quantity::kLocalB,
                                       Quantity::kMutual,  Quantity::kEve,    Quantity::kFidelity};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string normalize_key(std::string_view key) {
  std::string k(text::trim(key));
  std::replace(k.begin(), k.end(), '_', '-');
  std::transform(k.begin(), k.end(), k.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return k;
}

bool wants(const std::vector<Quantity>& qs, std::initializer_list<Quantity> any) {
  return std::any_of(qs.begin(), qs.end(), [&](Quantity q) {
    return std::find(any.begin(), any.end(), q) != any.end();
  });
}

QubitRelaxation resolve_qubit(char name, double t2, const std::optional<double>& alpha,
                              const std::optional<double>& t1, double z_eq) {
  const std::string suffix(1, name);
  if (alpha && t1) {
    throw ValidationError("alpha-" + suffix + " and t1" + suffix + " are mutually exclusive");
  }
  QubitRelaxation q = t1 ? QubitRelaxation::from_times(*t1, t2, z_eq)
                         : QubitRelaxation{t2, alpha.value_or(1.0), z_eq};
  try {
    q.check();
  } catch (const ValidationError& e) {
    throw ValidationError("qubit " + suffix + ": " + e.what());
  }
  return q;
}

}  // namespace

std::string_view quantity_key(Quantity q) {
  switch (q) {
    case Quantity::kDecoded: return "id";
    case Quantity::kLocalA: return "ia";
    case Quantity::kLocalB: return "ib";
    case Quantity::kMutual: return "iab";
    case Quantity::kEve: return "iae";
    case Quantity::kFidelity: return "f";
  }
  return "?";
}

std::string_view quantity_column(Quantity q) {
  switch (q) {
    case Quantity::kDecoded: return "I_d";
    case Quantity::kLocalA: return "I_A";
    case Quantity::kLocalB: return "I_B";
    case Quantity::kMutual: return "I_AB";
    case Quantity::kEve: return "I_AE";
    case Quantity::kFidelity: return "F";
  }
  return "?";
}

Quantity parse_quantity(std::string_view key) {
  std::string k(text::trim(key));
  std::transform(k.begin(), k.end(), k.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  k.erase(std::remove(k.begin(), k.end(), '_'), k.end());
  for (Quantity q : kAllQuantities) {
    if (k == quantity_key(q)) return q;
  }
  throw ValidationError("unknown quantity '" + std::string(key) +
                        "' (expected id, ia, ib, iab, iae or f)");
}

double quantity_value(const InfoRecord& r, Quantity q) {
  switch (q) {
    case Quantity::kDecoded: return r.decoded;
    case Quantity::kLocalA: return r.local_a;
    case Quantity::kLocalB: return r.local_b;
    case Quantity::kMutual: return r.mutual;
    case Quantity::kEve: return r.eve;
    case Quantity::kFidelity: return r.fidelity;
  }
  return InfoRecord::kUnset;
}

InitialState InitialState::parse(std::string_view text_in) {
  const std::string_view t = text::trim(text_in);
  const auto colon = t.find(':');
  const std::string kind(colon == std::string_view::npos ? t : t.substr(0, colon));
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : t.substr(colon + 1);
  const std::string where = "state";

  if (kind == "bell") return {Bell{parse_bell_kind(text::trim(arg))}};
  if (kind == "pes") return {Partial{text::parse_double(arg, where)}};
  if (kind == "product") {
    const auto v = text::parse_doubles(arg, where);
    if (v.size() != 6) throw ValidationError("state: product needs 6 numbers sx,sy,sz,rx,ry,rz");
    return {Product{Vec3(v[0], v[1], v[2]), Vec3(v[3], v[4], v[5])}};
  }
  if (kind == "file") {
    if (text::trim(arg).empty()) throw ValidationError("state: file: needs a path");
    return {File{std::filesystem::path(std::string(text::trim(arg)))}};
  }
  if (colon == std::string_view::npos) {
    try {
      return {Bell{parse_bell_kind(t)}};
    } catch (const ValidationError&) {
    }
  }
  throw ValidationError("state: '" + std::string(t) +
                        "' is not one of bell:<kind>, pes:<p>, product:<6 numbers>, file:<path>");
}

std::string InitialState::describe() const {
  struct Visitor {
    std::string operator()(const Bell& b) const { return "bell:" + std::string(to_string(b.kind)); }
    std::string operator()(const Partial& p) const { return "pes:" + num(p.p); }
    std::string operator()(const Product& p) const {
      return "product:" + num(p.s(0)) + "," + num(p.s(1)) + "," + num(p.s(2)) + "," + num(p.r(0)) +
             "," + num(p.r(1)) + "," + num(p.r(2));
    }
    std::string operator()(const File& f) const { return "file:" + f.path.generic_string(); }
  };
  return std::visit(Visitor{}, value);
}

BlochPair InitialState::resolve() const {
  struct Visitor {
    BlochPair operator()(const Bell& b) const { return bell_state(b.kind); }
    BlochPair operator()(const Partial& p) const { return partial_entangled(p.p); }
    BlochPair operator()(const Product& p) const {
      if (!(p.s.norm() <= 1.0 + 1e-12) || !(p.r.norm() <= 1.0 + 1e-12)) {
        throw ValidationError("state: product Bloch vectors must have length <= 1");
      }
      return product_state(p.s, p.r);
    }
    BlochPair operator()(const File& f) const {
      BlochPair b = load_bloch_pair(f.path);
      const Validation v = validate(to_density(b));
      if (!v.ok) throw ValidationError("state file " + f.path.string() + ": " + v.diagnostic);
      return b;
    }
  };
  return std::visit(Visitor{}, value);
}

ChannelParams ChannelSpec::resolve() const {
  ChannelParams p;
  p.qubit_a = resolve_qubit('a', t2a, alpha_a, t1a, zeq_a);
  p.qubit_b = resolve_qubit('b', t2b, alpha_b, t1b, zeq_b);
  p.mode = mode;
  p.strict_cptp = strict.value_or(mode == EvolutionMode::kConsistent);
  return p;
}

void ExperimentConfig::set(std::string_view key_in, std::string_view value_in) {
  const std::string key = normalize_key(key_in);
  const std::string_view value = text::trim(value_in);
  const std::string where = "'" + key + "'";
  auto real = [&] { return text::parse_double(value, where); };

  try {
    if (key == "state") {
      initial_state = InitialState::parse(value);
    } else if (key == "t2") {
      channel.t2a = channel.t2b = real();
    } else if (key == "t2a") {
      channel.t2a = real();
    } else if (key == "t2b") {
      channel.t2b = real();
    } else if (key == "t1") {
      channel.t1a = channel.t1b = real();
    } else if (key == "t1a") {
      channel.t1a = real();
    } else if (key == "t1b") {
      channel.t1b = real();
    } else if (key == "alpha") {
      channel.alpha_a = channel.alpha_b = real();
    } else if (key == "alpha-a") {
      channel.alpha_a = real();
    } else if (key == "alpha-b") {
      channel.alpha_b = real();
    } else if (key == "zeq-a") {
      channel.zeq_a = real();
    } else if (key == "zeq-b") {
      channel.zeq_b = real();
    } else if (key == "mode") {
      channel.mode = parse_evolution_mode(value);
    } else if (key == "strict") {
      channel.strict = text::parse_bool(value, where);
    } else if (key == "order") {
      order = parse_protocol_order(value);
    } else if (key == "eta") {
      const auto v = text::parse_doubles(value, where);
      if (v.size() != 4) throw ValidationError("needs 4 comma-separated probabilities");
      std::copy(v.begin(), v.end(), eta.begin());
    } else if (key == "eve") {
      eve = parse_eve_variant(value);
    } else if (key == "tmax") {
      t_max = real();
    } else if (key == "steps") {
      const long long n = text::parse_integer(value, where);
      if (n < 2 || n > 10'000'000) throw ValidationError("must be between 2 and 10000000");
      steps = static_cast<int>(n);
    } else if (key == "quantities") {
      quantities.clear();
      if (!value.empty()) {
        for (const auto& token : text::split(value, ',')) quantities.push_back(parse_quantity(token));
      }
    } else if (key == "seed") {
      const long long n = text::parse_integer(value, where);
      if (n < 0) throw ValidationError("must be non-negative");
      seed = static_cast<std::uint64_t>(n);
    } else if (key == "label") {
      label = std::string(value);
    } else if (key == "out-dir") {
      out_dir = std::filesystem::path(std::string(value));
    } else {
      throw ValidationError("unknown key");
    }
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    if (msg.rfind(where, 0) == 0) throw;
    throw ValidationError(where + ": " + msg);
  }
}

std::vector<std::string> ExperimentConfig::problems() const {
  std::vector<std::string> out;
  if (!(t_max > 0.0) || !std::isfinite(t_max)) out.push_back("'tmax': must be positive");
  if (steps < 2) out.push_back("'steps': must be at least 2");
  if (quantities.empty()) out.push_back("'quantities': at least one quantity is required");
  for (std::size_t i = 0; i < quantities.size(); ++i) {
    if (std::find(quantities.begin(), quantities.begin() + static_cast<std::ptrdiff_t>(i),
                  quantities[i]) != quantities.begin() + static_cast<std::ptrdiff_t>(i)) {
      out.push_back("'quantities': duplicate '" + std::string(quantity_key(quantities[i])) + "'");
    }
  }
  if (label.empty() || !std::all_of(label.begin(), label.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '.' || c == '-' || c == '_';
      })) {
    out.push_back("'label': must be non-empty and use only letters, digits, '.', '-', '_'");
  }
  try {
    EncodingSpec::pauli(eta).check();
  } catch (const ValidationError& e) {
    out.push_back(std::string("'eta': ") + e.what());
  }
  try {
    channel.resolve();
  } catch (const ValidationError& e) {
    out.push_back(std::string("channel: ") + e.what());
  }
  try {
    const BlochPair b = initial_state.resolve();
    if (wants(quantities, {Quantity::kEve, Quantity::kFidelity})) {
      const double s = entropy(to_density(b));
      if (s > 1e-9) {
        out.push_back("'state': F and I_AE need a pure initial carrier (entropy " + num(s) + " bits)");
      }
    }
  } catch (const std::exception& e) {
    out.push_back(std::string("'state': ") + e.what());
  }
  return out;
}

void ExperimentConfig::check() const {
  const auto list = problems();
  if (list.empty()) return;
  std::string msg = "invalid configuration:";
  for (const auto& p : list) msg += "\n  " + p;
  throw ValidationError(msg);
}

std::vector<double> ExperimentConfig::time_grid() const { return uniform_grid(t_max, steps); }

InfoOptions ExperimentConfig::info_options() const {
  InfoOptions o;
  o.encoding = EncodingSpec::pauli(eta);
  o.order = order;
  o.eve = eve;
  o.entropic = wants(quantities, {Quantity::kDecoded, Quantity::kLocalA, Quantity::kLocalB,
                                  Quantity::kMutual});
  o.fidelity = wants(quantities, {Quantity::kEve, Quantity::kFidelity});
  return o;
}

std::string ExperimentConfig::describe() const {
  const auto opt = [](const std::optional<double>& v) { return v ? num(*v) : std::string("-"); };
  std::string q;
  for (Quantity x : quantities) q += (q.empty() ? "" : ",") + std::string(quantity_key(x));
  std::string strict_text = "default";
  if (channel.strict) strict_text = *channel.strict ? "true" : "false";
  return "state=" + initial_state.describe() + " t2a=" + num(channel.t2a) +
         " t2b=" + num(channel.t2b) + " alpha-a=" + opt(channel.alpha_a) +
         " alpha-b=" + opt(channel.alpha_b) + " t1a=" + opt(channel.t1a) +
         " t1b=" + opt(channel.t1b) + " zeq-a=" + num(channel.zeq_a) +
         " zeq-b=" + num(channel.zeq_b) + " mode=" + std::string(to_string(channel.mode)) +
         " strict=" + strict_text + " order=" + std::string(to_string(order)) + " eta=" +
         num(eta[0]) + "," + num(eta[1]) + "," + num(eta[2]) + "," + num(eta[3]) +
         " eve=" + std::string(to_string(eve)) + " tmax=" + num(t_max) +
         " steps=" + std::to_string(steps) + " quantities=" + q + " seed=" + std::to_string(seed);
}

ExperimentConfig parse_config(std::string_view content, ExperimentConfig base,
                              const std::filesystem::path& base_dir) {
  for (const text::KeyValue& kv : text::key_value_lines(content)) {
    try {
      base.set(kv.key, kv.value);
      if (normalize_key(kv.key) == "state" && !base_dir.empty()) {
        if (auto* f = std::get_if<InitialState::File>(&base.initial_state.value);
            f && f->path.is_relative()) {
          f->path = base_dir / f->path;
        }
      }
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(kv.line) + ": " + e.what());
    }
  }
  return base;
}

ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str(), std::move(base), path.parent_path());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::vector<double> uniform_grid(double t_max, int steps) {
  if (!(t_max > 0.0) || steps < 2) throw ValidationError("time grid needs tmax > 0 and steps >= 2");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double last = static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = (t_max * i) / last;
  grid.back() = t_max;
  return grid;
}

}  // namespace blochdense
