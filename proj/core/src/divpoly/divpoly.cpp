#include "torsion/divpoly/divpoly.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "torsion/error.hpp"
#include "torsion/exactpoly/algorithms.hpp"

namespace torsion {

namespace {

const MPoly& psi3_display() {
  static const MPoly p = MPoly::parse("3*x^4 + b2*x^3 + 3*b4*x^2 + 3*b6*x + b8");
  return p;
}

const MPoly& psi4_display_body() {
  static const MPoly p = MPoly::parse(
      "2*x^6 + b2*x^5 + 5*b4*x^4 + 10*b6*x^3 + 10*b8*x^2 + b2*b8*x + -b4*b6*x + b4*b8 + -b6^2");
  return p;
}

}  // namespace

std::string Model::name() const {
  switch (kind_) {
    case Kind::generic:
      return "generic";
    case Kind::short_form:
      return "short";
    case Kind::truncated:
      return "weight" + std::to_string(max_weight_);
  }
  return "unknown";
}

MPoly Model::apply(const MPoly& p) const {
  switch (kind_) {
    case Kind::generic:
      return p;
    case Kind::short_form:
      return evaluate(p, Sym::b2, Rat(0));
    case Kind::truncated: {
      const unsigned w = max_weight_;
      return filter_terms(p, [w](const Monomial& m) { return b_weight(m) <= w; });
    }
  }
  return p;
}

MPoly Model::mul(const MPoly& a, const MPoly& b) const {
  if (kind_ != Kind::truncated) return a * b;
  const unsigned w = max_weight_;
  return multiply(a, b, [w](const Monomial& m) { return b_weight(m) <= w; });
}

MPoly eliminate_b8(const MPoly& p) {
  if (!p.contains(Sym::b8)) return p;
  static const MPoly b8 = MPoly::parse("1/4*b2*b6 + -1/4*b4^2");
  return compose(p, {{Sym::b8, b8}});
}

MPoly psi2_squared() {
  static const MPoly p = MPoly::parse("4*x^3 + b2*x^2 + 2*b4*x + b6");
  return p;
}

std::string PsiRep::to_string() const {
  if (!has_psi2_factor) return body.to_string();
  if (body == MPoly(1)) return "psi2";
  return "psi2*(" + body.to_string() + ")";
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("TORSION_CACHE_DIR"); dir != nullptr && *dir != '\0') return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return std::filesystem::path(xdg) / "torsion";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "torsion";
  }
  return std::filesystem::temp_directory_path() / "torsion-cache";
}

DivPolyTable::DivPolyTable(Model model, std::optional<std::filesystem::path> cache_dir)
    : model_(model) {
  if (cache_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*cache_dir, ec);
    const auto file = *cache_dir / ("divpoly-" + model_.name() + ".tsv");
    // Caching is silently disabled when the file cannot be opened for append.
    std::ofstream probe(file, std::ios::app);
    if (probe) cache_file_ = file;
  }
}

std::size_t DivPolyTable::cache_hits() const {
  std::lock_guard lock(mu_);
  return hits_;
}

std::optional<std::filesystem::path> DivPolyTable::cache_file() const { return cache_file_; }

void DivPolyTable::load_cache() {
  if (loaded_) return;
  loaded_ = true;
  if (!cache_file_) return;
  std::ifstream in(*cache_file_);
  std::string line;
  while (std::getline(in, line)) {
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string::npos) continue;
    const std::string kind = line.substr(0, t1);
    unsigned n = 0;
    try {
      n = static_cast<unsigned>(std::stoul(line.substr(t1 + 1, t2 - t1 - 1)));
      MPoly p = MPoly::parse(std::string_view(line).substr(t2 + 1));
      auto& slot = kind == "psi" ? body_ : kind == "f" ? f_ : F_;
      if (kind == "psi" || kind == "f" || kind == "F") slot.emplace(n, std::move(p));
    } catch (const std::exception&) {
      // A damaged line only costs a recomputation.
    }
  }
}

void DivPolyTable::store(const char* kind, unsigned n, const MPoly& p) {
  if (!cache_file_) return;
  std::ofstream out(*cache_file_, std::ios::app);
  out << kind << '\t' << n << '\t' << p.to_string() << '\n';
}

PsiRep DivPolyTable::psi(unsigned n) {
  if (n == 0) throw std::invalid_argument("psi needs n >= 1");
  PsiRep rep{n, n % 2 == 0, MPoly(1)};
  if (n == 3) {
    rep.body = model_.apply(psi3_display());
  } else if (n == 4) {
    rep.body = model_.apply(psi4_display_body());
  } else if (n > 4) {
    rep.body = psi_body(n);
  }
  return rep;
}

MPoly DivPolyTable::psi_body(unsigned n) {
  if (n == 0) throw std::invalid_argument("psi needs n >= 1");
  std::lock_guard lock(mu_);
  load_cache();
  return body_locked(n);
}

MPoly DivPolyTable::f(unsigned n) {
  if (n < 2) throw std::invalid_argument("f needs n >= 2");
  std::lock_guard lock(mu_);
  load_cache();
  return f_locked(n);
}

MPoly DivPolyTable::F(unsigned n) {
  if (n < 2) throw std::invalid_argument("F needs n >= 2");
  std::lock_guard lock(mu_);
  load_cache();
  return F_locked(n);
}

MPoly DivPolyTable::body_locked(unsigned n) {
  if (auto it = body_.find(n); it != body_.end()) {
    ++hits_;
    return it->second;
  }
  MPoly b;
  if (n <= 2) {
    b = MPoly(1);
  } else if (n == 3) {
    b = model_.apply(eliminate_b8(psi3_display()));
  } else if (n == 4) {
    b = model_.apply(eliminate_b8(psi4_display_body()));
  } else {
    const MPoly P = model_.apply(psi2_squared());
    const MPoly P2 = model_.mul(P, P);
    auto cube = [&](const MPoly& a) { return model_.mul(model_.mul(a, a), a); };
    const unsigned m = n / 2;
    if (n % 2 == 1) {
      // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
      MPoly first = model_.mul(body_locked(m + 2), cube(body_locked(m)));
      MPoly second = model_.mul(body_locked(m - 1), cube(body_locked(m + 1)));
      if (m % 2 == 0) {
        first = model_.mul(P2, first);
      } else {
        second = model_.mul(P2, second);
      }
      b = first - second;
    } else {
      // psi_2 psi_{2m} = psi_{m-1}^2 psi_m psi_{m+2} - psi_{m-2} psi_m psi_{m+1}^2;
      // the psi_2^2 from each side cancels.
      const MPoly bm = body_locked(m);
      const MPoly a = body_locked(m - 1);
      const MPoly c = body_locked(m + 1);
      b = model_.mul(model_.mul(model_.mul(a, a), bm), body_locked(m + 2)) -
          model_.mul(model_.mul(body_locked(m - 2), bm), model_.mul(c, c));
    }
  }
  store("psi", n, b);
  body_.emplace(n, b);
  return b;
}

MPoly DivPolyTable::f_locked(unsigned n) {
  if (auto it = f_.find(n); it != f_.end()) {
    ++hits_;
    return it->second;
  }
  const MPoly b = body_locked(n);
  MPoly sq = model_.mul(b, b);
  if (n % 2 == 0) sq = model_.mul(model_.apply(psi2_squared()), sq);
  MPoly f = sq * Rat(1, static_cast<long>(n) * static_cast<long>(n));
  store("f", n, f);
  f_.emplace(n, f);
  return f;
}

MPoly DivPolyTable::F_locked(unsigned n) {
  if (auto it = F_.find(n); it != F_.end()) {
    ++hits_;
    return it->second;
  }
  MPoly F;
  if (n == 2) {
    F = f_locked(2);
  } else {
    MPoly divisor(1);
    for (unsigned d = 2; d < n; ++d) {
      if (n % d != 0) continue;
      const MPoly Fd = F_locked(d);
      divisor = model_.mul(divisor, d == 2 ? Fd : model_.mul(Fd, Fd));
    }
    const MPoly fn = f_locked(n);
    if (model_.kind() == Model::Kind::truncated) {
      F = layered_sqrt(layered_divexact(fn, divisor, model_.max_weight()), model_.max_weight());
    } else {
      F = sqrt_exact(divexact(fn, divisor));
    }
  }
  store("F", n, F);
  F_.emplace(n, F);
  return F;
}

}  // namespace torsion
