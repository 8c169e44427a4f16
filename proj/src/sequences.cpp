#include "circeig/sequences.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "circeig/error.hpp"
#include "circeig/format.hpp"

namespace circeig {

namespace {

constexpr double kPi = std::numbers::pi;

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw ValidationError(std::string(what) + ": not a finite number: '" +
                          std::string(text) + "'");
  }
  return value;
}

void check_width(double width) {
  if (!(width > 0.0 && width < 0.5)) {
    throw DomainError("window width W must satisfy 0 < W < 1/2");
  }
}

void check_frequency(double f) {
  if (!(f >= 0.0 && f <= 1.0)) {
    throw DomainError("frequency must lie in [0, 1]");
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

// ---- HermitianSequence ------------------------------------------------

HermitianSequence HermitianSequence::from_coefficients(
    ComplexVector coeffs, std::optional<DecayClass> decay) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  if (coeffs[0].imag() != 0.0) {
    throw ValidationError("h[0] must be real for a Hermitian Toeplitz family");
  }
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw ValidationError("coefficients must be finite");
    }
  }
  std::size_t last_nonzero = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != Complex{}) last_nonzero = k;
  }
  HermitianSequence seq;
  if (decay) {
    if (decay->kind == DecayKind::banded && last_nonzero > decay->bandwidth) {
      throw ValidationError("coefficient beyond the declared bandwidth");
    }
    seq.decay_ = *decay;
  } else {
    seq.decay_ = {DecayKind::banded, last_nonzero};
  }
  coeffs.resize(last_nonzero + 1);
  seq.stored_ = std::move(coeffs);
  return seq;
}

HermitianSequence HermitianSequence::from_generator(Generator gen,
                                                    DecayClass decay) {
  if (gen(0).imag() != 0.0) {
    throw ValidationError("h[0] must be real for a Hermitian Toeplitz family");
  }
  HermitianSequence seq;
  seq.generator_ = std::move(gen);
  seq.decay_ = decay;
  return seq;
}

Complex HermitianSequence::coeff(std::size_t k) const {
  if (generator_) return generator_(k);
  return k < stored_.size() ? stored_[k] : Complex{};
}

Complex HermitianSequence::operator[](std::ptrdiff_t k) const {
  if (k >= 0) return coeff(static_cast<std::size_t>(k));
  return std::conj(coeff(static_cast<std::size_t>(-k)));
}

ComplexVector HermitianSequence::materialize(std::size_t count) const {
  ComplexVector out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = coeff(k);
  return out;
}

std::optional<std::size_t> HermitianSequence::stored_length() const {
  if (generator_) return std::nullopt;
  return stored_.size();
}

// ---- built-in families ------------------------------------------------

SymbolPair make_triangular(double width) {
  check_width(width);
  // Fourier coefficients of the unit-peak triangle: W sinc^2(W k).
  auto gen = [width](std::size_t k) -> Complex {
    if (k == 0) return width;
    const double kk = static_cast<double>(k);
    const double s = std::sin(kPi * width * kk) / (kPi * kk);
    return s * s / width;
  };
  SymbolSpec sym;
  sym.eval = [width](double f) {
    if (f <= width) return 1.0 - f / width;
    if (f >= 1.0 - width) return 1.0 - (1.0 - f) / width;
    return 0.0;
  };
  sym.ess_sup = 1.0;
  sym.ess_inf = 0.0;
  sym.connected_range = true;
  sym.family = Family::triangular;
  sym.params = {width};
  return {HermitianSequence::from_generator(
              gen, {DecayKind::absolutely_summable, 0}),
          std::move(sym)};
}

SymbolPair make_sawtooth() {
  auto gen = [](std::size_t k) -> Complex {
    if (k == 0) return 0.5;
    if (k % 2 == 1) return 0.0;
    // 2 / (j 2 pi k) = -j / (pi k)
    return {0.0, -1.0 / (kPi * static_cast<double>(k))};
  };
  // Series sum of the coefficients above: falls from 1 to 0 on each half
  // period, jumping back up at f = 0 and f = 1/2.
  SymbolSpec sym;
  sym.eval = [](double f) {
    if (f < 0.5) return 1.0 - 2.0 * f;
    return 2.0 - 2.0 * f;
  };
  sym.ess_sup = 1.0;
  sym.ess_inf = 0.0;
  sym.connected_range = true;
  sym.family = Family::sawtooth;
  return {HermitianSequence::from_generator(gen, {DecayKind::square_summable, 0}),
          std::move(sym)};
}

SymbolPair make_rect_window(double width) {
  check_width(width);
  auto gen = [width](std::size_t k) -> Complex {
    if (k == 0) return 2.0 * width;
    const double kk = static_cast<double>(k);
    return std::sin(2.0 * kPi * width * kk) / (kPi * kk);
  };
  SymbolSpec sym;
  sym.eval = [width](double f) {
    return (f <= width || f > 1.0 - width) ? 1.0 : 0.0;
  };
  sym.ess_sup = 1.0;
  sym.ess_inf = 0.0;
  sym.connected_range = false;
  sym.family = Family::rect_window;
  sym.params = {width};
  return {HermitianSequence::from_generator(gen, {DecayKind::square_summable, 0}),
          std::move(sym)};
}

SymbolPair make_banded(ComplexVector coeffs) {
  auto seq = HermitianSequence::from_coefficients(std::move(coeffs));
  const std::size_t r = seq.decay().bandwidth;
  SymbolSpec sym;
  sym.eval = [seq, r](double f) { return partial_fourier_sum(seq, r, f); };
  // Trigonometric polynomial: continuous, so the essential range is the
  // closure of a fine sample.
  constexpr std::size_t kSamples = 1 << 14;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i <= kSamples; ++i) {
    const double v = sym.eval(static_cast<double>(i) / kSamples);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  sym.ess_sup = hi;
  sym.ess_inf = lo;
  sym.connected_range = true;
  sym.family = Family::banded;
  for (std::size_t k = 0; k <= r; ++k) sym.params.push_back(seq.coeff(k).real());
  return {std::move(seq), std::move(sym)};
}

SymbolPair make_constant(double value) {
  if (!std::isfinite(value)) throw ValidationError("constant must be finite");
  auto seq = HermitianSequence::from_coefficients({value});
  SymbolSpec sym;
  sym.eval = [value](double) { return value; };
  sym.ess_sup = value;
  sym.ess_inf = value;
  sym.connected_range = true;
  sym.family = Family::constant;
  sym.params = {value};
  return {std::move(seq), std::move(sym)};
}

SymbolPair make_custom(const std::string& path) {
  return {HermitianSequence::from_coefficients(read_coeff_file(path),
                                               DecayClass{DecayKind::unknown, 0}),
          std::nullopt};
}

SymbolPair make_symbol(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view params =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto need_params = [&] {
    if (params.empty()) {
      throw ValidationError("symbol '" + std::string(name) + "' needs a parameter");
    }
  };
  if (name == "triangular") {
    need_params();
    return make_triangular(parse_double(params, "triangular width"));
  }
  if (name == "sawtooth") {
    if (!params.empty()) throw ValidationError("sawtooth takes no parameters");
    return make_sawtooth();
  }
  if (name == "rect_window") {
    need_params();
    return make_rect_window(parse_double(params, "rect_window width"));
  }
  if (name == "constant") {
    need_params();
    return make_constant(parse_double(params, "constant value"));
  }
  if (name == "banded") {
    need_params();
    ComplexVector coeffs;
    for (auto part : split(params, ',')) {
      coeffs.emplace_back(parse_double(trim(part), "banded coefficient"));
    }
    return make_banded(std::move(coeffs));
  }
  if (name == "custom") {
    need_params();
    return make_custom(std::string(params));
  }
  throw ValidationError("unknown symbol family '" + std::string(name) + "'");
}

SymbolPair parse_inline_sequence(std::string_view text) {
  ComplexVector coeffs;
  std::vector<bool> seen;
  for (auto part : split(text, ',')) {
    part = trim(part);
    const auto eq = part.find('=');
    if (part.size() < 3 || part[0] != 'h' || eq == std::string_view::npos) {
      throw ValidationError("inline sequence entries look like h<k>=<value>");
    }
    const auto key = part.substr(1, eq - 1);
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), k);
    if (ec != std::errc{} || ptr != key.data() + key.size()) {
      throw ValidationError("bad coefficient index '" + std::string(key) + "'");
    }
    if (k >= (std::size_t{1} << 24)) throw ValidationError("coefficient index too large");
    const double value = parse_double(part.substr(eq + 1), "inline coefficient");
    if (coeffs.size() <= k) {
      coeffs.resize(k + 1);
      seen.resize(k + 1, false);
    }
    if (seen[k]) throw ValidationError("duplicate coefficient h" + std::to_string(k));
    seen[k] = true;
    coeffs[k] = value;
  }
  return make_banded(std::move(coeffs));
}

std::vector<std::pair<std::string, std::string>> symbol_families() {
  return {
      {"triangular:W", "unit-peak triangle tri(f/W), 0 < W < 1/2 (absolutely summable)"},
      {"sawtooth", "period-1/2 sawtooth on [0,1], h[k] = (1+(-1)^k)/(j2pik)"},
      {"rect_window:W", "indicator of [0,W] U [1-W,1], h[k] = sin(2piWk)/(pik)"},
      {"constant:c", "constant symbol c, H_N = c I"},
      {"banded:h0,h1,...", "real banded coefficients h[0..r]"},
      {"custom:path", "coefficient file (#toeplitz-coeffs v1)"},
  };
}

// ---- coefficient files ------------------------------------------------

ComplexVector read_coeff_file(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCoeffFileHeader) {
    throw ValidationError("coefficient file must start with '" +
                          std::string(kCoeffFileHeader) + "'");
  }
  ComplexVector coeffs;
  std::optional<std::size_t> previous;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    std::vector<std::string_view> fields;
    for (auto tok : split(body, ' ')) {
      for (auto t : split(tok, '\t')) {
        if (!t.empty()) fields.push_back(t);
      }
    }
    const std::string where = "line " + std::to_string(line_no);
    if (fields.size() != 3) throw ValidationError(where + ": expected '<k> <re> <im>'");
    std::size_t k = 0;
    auto [ptr, ec] =
        std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), k);
    if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size()) {
      throw ValidationError(where + ": bad index");
    }
    if (previous && k <= *previous) {
      throw ValidationError(where + ": indices must be strictly increasing");
    }
    if (k >= (std::size_t{1} << 26)) throw ValidationError(where + ": index too large");
    previous = k;
    const double re = parse_double(fields[1], where);
    const double im = parse_double(fields[2], where);
    if (k == 0 && im != 0.0) throw ValidationError(where + ": h[0] must be real");
    coeffs.resize(k + 1);
    coeffs[k] = {re, im};
  }
  return coeffs;
}

ComplexVector read_coeff_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read coefficient file '" + path + "'");
  return read_coeff_file(in);
}

void write_coeff_file(std::ostream& out, const HermitianSequence& seq,
                      std::size_t count) {
  out << kCoeffFileHeader << '\n';
  for (std::size_t k = 0; k < count; ++k) {
    const Complex c = seq.coeff(k);
    if (c == Complex{} && k != 0) continue;
    out << k << ' ' << format_double(c.real()) << ' ' << format_double(c.imag())
        << '\n';
  }
}

// ---- sums and kernels -------------------------------------------------

double partial_fourier_sum(const HermitianSequence& seq, std::size_t n, double f) {
  check_frequency(f);
  double acc = seq.coeff(0).real();
  for (std::size_t k = 1; k <= n; ++k) {
    const double angle = 2.0 * kPi * f * static_cast<double>(k);
    // h[k] e^{j a} + conj(h[k]) e^{-j a} = 2 Re(h[k] e^{j a})
    acc += 2.0 * (seq.coeff(k) * Complex{std::cos(angle), std::sin(angle)}).real();
  }
  return acc;
}

double cesaro_sum(const HermitianSequence& seq, std::size_t n_terms, double f) {
  if (n_terms == 0) throw DomainError("Cesaro sum needs N >= 1");
  check_frequency(f);
  const double n = static_cast<double>(n_terms);
  double acc = seq.coeff(0).real();
  for (std::size_t k = 1; k < n_terms; ++k) {
    const double kk = static_cast<double>(k);
    const double angle = 2.0 * kPi * f * kk;
    acc += 2.0 * (1.0 - kk / n) *
           (seq.coeff(k) * Complex{std::cos(angle), std::sin(angle)}).real();
  }
  return acc;
}

double dirichlet(std::size_t n, double f) {
  const double nn = static_cast<double>(n);
  const double nearest = std::round(f);
  if (std::abs(f - nearest) < 1e-12) {
    // lim sin(pi N f)/sin(pi f) at integer m is (-1)^{m (N-1)} N.
    const auto m = static_cast<long long>(nearest);
    const bool negative = (n % 2 == 0) && (m % 2 != 0);
    return negative ? -nn : nn;
  }
  return std::sin(kPi * nn * f) / std::sin(kPi * f);
}

double dirichlet_energy(std::size_t n, double a, double b, std::size_t panels) {
  if (!(a < b)) throw DomainError("dirichlet_energy needs a < b");
  if (panels == 0) throw DomainError("dirichlet_energy needs at least one panel");
  const double h = (b - a) / static_cast<double>(panels);
  // Fixed chunking keeps the summation order independent of thread count.
  constexpr std::size_t kChunks = 64;
  std::vector<double> partial(kChunks, 0.0);
  const auto chunks = static_cast<long long>(kChunks);
#pragma omp parallel for schedule(static)
  for (long long c = 0; c < chunks; ++c) {
    const std::size_t begin = panels * static_cast<std::size_t>(c) / kChunks;
    const std::size_t end = panels * static_cast<std::size_t>(c + 1) / kChunks;
    double local = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double d = dirichlet(n, a + (static_cast<double>(i) + 0.5) * h);
      local += d * d;
    }
    partial[static_cast<std::size_t>(c)] = local;
  }
  double acc = 0.0;
  for (double v : partial) acc += v;
  return acc * h;
}

}  // namespace circeig
