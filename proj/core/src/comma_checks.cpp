#include <sstream>

#include "fibcat/catalog.hpp"
#include "fibcat/constructions.hpp"
#include "fibcat/iso.hpp"

namespace fibcat {

namespace {

std::string describe(const Functor& f) {
    std::ostringstream os;
    os << "stage functor {";
    for (std::size_t x = 0; x < f.dom()->num_objects(); ++x)
        os << (x ? ", " : "") << f.dom()->object(static_cast<int>(x)).to_string() << " ↦ "
           << f.cod()->object(f.obj(static_cast<int>(x))).to_string();
    return os.str() + "}";
}

}  // namespace

Report verify_comma_universality(const CommaResult& cr, const std::string& label) {
    Report r;
    const std::string tag = "[" + label + "]";
    const std::vector<CatRef> stages = {terminal(), walking_arrow(), discrete(2)};

    r.run("comma.lambda" + tag, "the comma square's 2-cell has component σ at (a, b, σ)",
          [&]() -> std::optional<std::string> {
              for (int x = 0; x < static_cast<int>(cr.apex->num_objects()); ++x) {
                  const Term& o = cr.apex->object(x);
                  if (cr.s.cod()->morphism(cr.lambda.component(x)) != o.arg(2)) return "component at " + o.to_string();
              }
              return std::nullopt;
          });
    r.run("comma.mediate_extract" + tag, "a functor into the comma is the mediator of its own data",
          [&]() -> std::optional<std::string> {
              for (const auto& s : stages)
                  for (const auto& f : enumerate_functors(s, cr.apex, {}, 40))
                      if (!equal_functor(mediate_comma(cr, comma_extract(cr, f)), f)) return describe(f);
              return std::nullopt;
          });
    r.run("comma.extract_mediate" + tag, "the mediator of (u0, u1, σ) has data (u0, u1, σ)",
          [&]() -> std::optional<std::string> {
              for (const auto& s : stages)
                  for (const auto& u0 : enumerate_functors(s, cr.r.dom(), {}, 6))
                      for (const auto& u1 : enumerate_functors(s, cr.s.dom(), {}, 6))
                          for (const auto& sg : enumerate_nat_trans(compose(cr.r, u0), compose(cr.s, u1), 6)) {
                              const Functor m = mediate_comma(cr, {u0, u1, sg});
                              const CommaCone back = comma_extract(cr, m);
                              if (!equal_functor(back.u0, u0) || !equal_functor(back.u1, u1) || !(back.sigma == sg))
                                  return describe(m);
                          }
              return std::nullopt;
          });
    r.run("comma.2cell" + tag, "2-cells into the comma are determined by their two projections",
          [&]() -> std::optional<std::string> {
              for (const auto& s : stages) {
                  const auto fs = enumerate_functors(s, cr.apex, {}, 8);
                  for (const auto& f : fs)
                      for (const auto& g : fs)
                          for (const auto& ph : enumerate_nat_trans(f, g, 4)) {
                              const NatTrans back =
                                  mediate_comma_2cell(cr, f, g, whisker_left(cr.d0, ph), whisker_left(cr.d1, ph));
                              if (!(back == ph)) return "2-cell out of " + describe(f);
                          }
              }
              return std::nullopt;
          });
    return r;
}

}  // namespace fibcat
