#include "vfilt/poisson.hpp"
#include "vfilt/poisson_checks.hpp"

#include <doctest.h>

using namespace vfilt;

namespace {

State st(std::vector<int> parts, int lpoint = 0, Scalar c = 1) { return State(Monomial{std::move(parts), lpoint}, c); }

void expect_all_pass(const VerificationReport& r) {
  for (const auto& rec : r.records()) {
    CAPTURE(rec.name);
    CAPTURE(rec.params.dump());
    CHECK(rec.status == CheckStatus::pass);
  }
}

}  // namespace

TEST_CASE("Zhu product and bracket examples") {
  FiltrationEngine h(AlgebraPreset::heisenberg(), 6);
  ZhuAlgebra zhu(h);
  const ZhuElement b = zhu.element(st({1}));
  const ZhuElement bb = zhu.product(b, b);
  CHECK(bb == zhu.element(st({1, 1})));
  CHECK_FALSE(bb.is_zero());
  CHECK(bb.representative == st({1, 1}));  // b_{-2}1 is the C_2 pivot at weight 2
  CHECK(zhu.product(bb, b) == zhu.product(b, bb));
  CHECK(zhu.product(zhu.one(), b) == b);
  CHECK(zhu.bracket(b, b).is_zero());
  CHECK(zhu.bracket(zhu.one(), bb).is_zero());
  // Leibniz instance [b, b.b] = 0
  CHECK(zhu.bracket(b, bb).is_zero());
  // representative shift by a C_2 vector
  const ZhuElement shifted{st({1}) + st({2})};
  CHECK(zhu.bracket(shifted, bb) == zhu.bracket(b, bb));
  CHECK(zhu.element(st({2})).is_zero());
  for (int w = 0; w <= 6; ++w) CHECK(zhu.quotient_basis(w).size() == 1);
  CHECK_THROWS_AS(zhu.product(zhu.element(st({1, 1, 1, 1})), zhu.element(st({1, 1, 1}))), CutoffExceeded);

  FiltrationEngine neg(AlgebraPreset::lattice(-2), 2, 1);
  CHECK_THROWS_AS(ZhuAlgebra{neg}, std::invalid_argument);
}

TEST_CASE("Zhu bracket on the lattice") {
  FiltrationEngine l(AlgebraPreset::lattice(2), 4);
  ZhuAlgebra zhu(l);
  auto& va = l.algebra();
  const ZhuElement ep = zhu.element(va.lattice_vector(1));
  const ZhuElement em = zhu.element(va.lattice_vector(-1));
  // (e^a)_0 e^{-a} = b_{-1}1 for gram 2 with the trivial cocycle
  const ZhuElement br = zhu.bracket(ep, em);
  CHECK(br == zhu.element(va.mode_act(va.lattice_vector(1), 0, va.lattice_vector(-1))));
  CHECK(br == zhu.element(va.generator()));
  CHECK(zhu.bracket(em, ep) == -1 * br);
  std::vector<std::size_t> dims;
  for (int w = 0; w <= 4; ++w) dims.push_back(zhu.quotient_basis(w).size());
  CHECK(dims == std::vector<std::size_t>{1, 3, 1, 0, 0});
}

TEST_CASE("gr operations") {
  FiltrationEngine h(AlgebraPreset::heisenberg(), 8);
  GrAlgebra gr(h, 4);
  const GrElement b = gr.element(0, 1, st({1}));
  const GrElement one = gr.one();
  CHECK(gr.product(one, b) == b);
  const GrElement bb = gr.product(b, b);
  CHECK(bb.degree == 0);
  CHECK(bb.weight == 2);
  CHECK(bb.representative == st({1, 1}));

  const GrElement db = gr.partial(b);
  CHECK(db.degree == 1);
  CHECK(db.weight == 2);
  CHECK(db.representative == st({2}));
  CHECK(gr.partial(one).is_zero());

  CHECK(gr.yminus(b, 0, b).is_zero());
  // degree-1 classes of b_{-2}1, mode 1
  const GrElement x = gr.element(1, 2, st({2}));
  const GrElement y = gr.yminus(x, 1, x);
  CHECK(y.degree == 1);
  CHECK(y.weight == 2);
  CHECK(y == gr.element(1, 2, h.algebra().mode_act(st({2}), 1, st({2}))));
  // (d b)_1 b = -b_0 b = 0
  CHECK(gr.yminus(db, 1, b).is_zero());
  // negative output degree is zero by convention
  const GrElement neg = gr.yminus(b, 3, b);
  CHECK(neg.degree == -3);
  CHECK(neg.is_zero());

  CHECK_THROWS_AS(gr.element(2, 2, st({1, 1})), std::invalid_argument);  // not in E_2
  CHECK_THROWS_AS(gr.partial(gr.element(4, 5, st({5}))), std::out_of_range);
  CHECK_THROWS_AS(gr.element(0, 3, st({1})), std::invalid_argument);
  // degree 0 reduction kills C_2 = E_1
  CHECK(gr.element(0, 2, st({2})).is_zero());
  CHECK(gr.quotient_basis(1, 3).size() == 1);
}

TEST_CASE("Zhu and gr axiom sweeps") {
  Rng rng(11);
  for (auto [preset, cutoff] : {std::pair{AlgebraPreset::heisenberg(), 8}, std::pair{AlgebraPreset::lattice(2), 6}}) {
    CAPTURE(preset.name());
    FiltrationEngine e(preset, cutoff);
    ZhuAlgebra zhu(e);
    GrAlgebra gr(e, 4);
    auto z = verify_zhu_poisson_axioms(zhu, rng, 100);
    expect_all_pass(z);
    CHECK(z.records().size() == 7);
    for (const auto& rec : z.records()) CHECK(rec.params["checked"] == 100);
    expect_all_pass(verify_gr_axioms(gr, rng, 100));
    expect_all_pass(verify_vertex_lie_axioms(gr, rng, 100));
    expect_all_pass(verify_degree0_is_zhu(zhu, gr));
    expect_all_pass(verify_gr_generation(zhu, gr, 3));
  }
}

TEST_CASE("strict d-monomials at degree 3") {
  FiltrationEngine h(AlgebraPreset::heisenberg(), 6);
  ZhuAlgebra zhu(h);
  GrAlgebra gr(h, 4);
  auto r = verify_gr_generation(zhu, gr, 3);
  const CheckRecord* last = nullptr;
  for (const auto& rec : r.records())
    if (rec.name == "gr_strict_partial_monomials_span" && rec.params["degree"] == 3) last = &rec;
  REQUIRE(last);
  CHECK(last->status == CheckStatus::pass);
  CHECK(last->params["ranks"] == last->params["dims"]);
}
