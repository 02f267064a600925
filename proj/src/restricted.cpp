#include "pgca/restricted.hpp"

#include "pgca/error.hpp"

namespace pgca {

RVector RestrictedModule::act(const AlgebraElement& x, const RVector& v) const {
  RVector out;
  for (const auto& [g, c] : x) out.add_scaled(act(g, v), c);
  return out;
}

namespace {

class TrivialModule final : public RestrictedModule {
 public:
  std::string name() const override { return "trivial"; }
  RVector act(const Generator&, const RVector&) const override { return {}; }
  std::int64_t annihilation_bound(const RVector&) const override { return kTrivialBound; }
  RVector cyclic() const override { return unit_element(); }
};

class WhittakerHandle final : public RestrictedModule {
 public:
  explicit WhittakerHandle(const WhittakerDatum& psi) : module_(psi) {}
  std::string name() const override {
    return "whittaker(" + std::to_string(module_.datum().m) + "," + std::to_string(module_.datum().n) + ")";
  }
  RVector act(const Generator& g, const RVector& v) const override { return module_.act(g, v); }
  std::int64_t annihilation_bound(const RVector& v) const override { return module_.annihilation_bound(v); }
  RVector cyclic() const override { return module_.cyclic(); }

 private:
  WhittakerModule module_;
};

bool dropped(LiftStyle style, Family f) {
  switch (style) {
    case LiftStyle::VirasoroStyle: return f != Family::L && f != Family::C1;
    case LiftStyle::HeisenbergVirasoroStyle: return f == Family::I || f == Family::J;
    case LiftStyle::Trivial: return true;
  }
  return true;
}

class LiftedModule final : public RestrictedModule {
 public:
  LiftedModule(LiftStyle style, RestrictedHandle base) : style_(style), base_(std::move(base)) {}
  std::string name() const override { return std::string(lift_style_name(style_)) + "(" + base_->name() + ")"; }
  RVector act(const Generator& g, const RVector& v) const override {
    if (dropped(style_, g.family())) return {};
    return base_->act(g, v);
  }
  std::int64_t annihilation_bound(const RVector& v) const override { return base_->annihilation_bound(v); }
  RVector cyclic() const override { return base_->cyclic(); }

 private:
  LiftStyle style_;
  RestrictedHandle base_;
};

}  // namespace

RestrictedHandle trivial_module() { return std::make_shared<TrivialModule>(); }

RestrictedHandle whittaker_handle(const WhittakerDatum& psi) { return std::make_shared<WhittakerHandle>(psi); }

std::string_view lift_style_name(LiftStyle s) {
  switch (s) {
    case LiftStyle::VirasoroStyle: return "virasoro_style";
    case LiftStyle::HeisenbergVirasoroStyle: return "heisenberg_virasoro_style";
    case LiftStyle::Trivial: return "trivial";
  }
  return "?";
}

LiftStyle parse_lift_style(std::string_view text) {
  for (auto s : {LiftStyle::VirasoroStyle, LiftStyle::HeisenbergVirasoroStyle, LiftStyle::Trivial})
    if (lift_style_name(s) == text) return s;
  throw Error(ErrorKind::InvalidSpec, "unknown lift style '" + std::string(text) + "'");
}

RestrictedHandle lift_restricted(LiftStyle style, RestrictedHandle base) {
  if (style == LiftStyle::Trivial) return trivial_module();
  if (!base) throw Error(ErrorKind::InvalidSpec, "lift needs a base module");
  return std::make_shared<LiftedModule>(style, std::move(base));
}

bool bound_is_sound(const RestrictedModule& r, const RVector& v, std::int64_t probes) {
  const std::int64_t n = r.annihilation_bound(v);
  for (Family f : {Family::L, Family::H, Family::J, Family::I})
    for (std::int64_t k = 1; k <= probes; ++k)
      if (!r.act(Generator(f, n + k), v).is_zero()) return false;
  return true;
}

}  // namespace pgca
