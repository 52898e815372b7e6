#include <doctest.h>

#include "rcskit/types.hpp"

using namespace rcskit;

TEST_CASE("frequency wavelength") {
    Frequency f{26.0};
    CHECK(f.wavelength_m() == doctest::Approx(299792458.0 / 26e9).epsilon(1e-15));
    CHECK(f.validate().empty());
    CHECK(Frequency{0.0}.validate().size() == 1);
    CHECK(Frequency{-3.0}.validate().size() == 1);
}

TEST_CASE("cir record invariants") {
    CirRecord rec;
    rec.freq = Frequency{28.0};
    rec.taps = {{1.0, 0.0}};
    CHECK(rec.validate().empty());

    rec.kind = SweepKind::Target; // no label
    CHECK(rec.validate().size() == 1);

    rec.taps.clear();
    rec.snapshot_index = -1;
    // All three violations reported at once.
    CHECK(rec.validate().size() == 3);
}

TEST_CASE("sample set invariants") {
    RcsSampleSet set;
    set.target_id = "agv";
    set.freq = Frequency{25.0};
    set.samples = {0.01, 0.02};
    CHECK(set.validate().empty());

    set.samples.push_back(0.0);
    set.samples.push_back(-2.0);
    CHECK(set.validate().size() == 2);
}

TEST_CASE("lognormal fit invariants") {
    LognormalFit fit{-3.5, 1.2, 100, 0.08, 0.002, false};
    CHECK(fit.validate().empty());
    fit.sigma = -1.0;
    fit.ks = 1.5;
    fit.n = 0;
    CHECK(fit.validate().size() == 3);
}

TEST_CASE("b1 spec validation") {
    CHECK(validate_b1(B1Constant{0.0}).empty());
    CHECK(validate_b1(B1Analytic{2.0, 0.0, -100.0}).empty());
    CHECK(validate_b1(B1Analytic{-1.0, 0.0, -100.0}).size() == 1);

    B1Table table{{0.0, 90.0, 180.0}, {0.0, -6.0, -12.0}, false};
    CHECK(validate_b1(table).empty());

    B1Table bad{{0.0, 90.0, 90.0}, {0.0, -6.0, -12.0}, false};
    CHECK(validate_b1(bad).size() == 1);

    B1Table mismatched{{0.0, 90.0}, {0.0}, false};
    CHECK(!validate_b1(mismatched).empty());
}

TEST_CASE("triple invariants") {
    RcsTriple t{-12.81, B1Constant{0.0}, 3.74, 3.0};
    CHECK(t.validate().empty());
    t.cap_k = 0.0;
    CHECK(t.validate().size() == 1);
}

TEST_CASE("geometry offset angle and quasi-monostatic flag") {
    Geometry g; // defaults: d = 3 m, baseline = 0.55 m
    CHECK(g.theta_offset_deg() == doctest::Approx(10.476).epsilon(1e-3));
    CHECK(g.quasi_monostatic());
    CHECK(g.validate().empty());

    Geometry wide{1.0, 1.0, 0.55, 15.0};
    CHECK(wide.theta_offset_deg() > 15.0);
    CHECK(!wide.quasi_monostatic());
    CHECK(wide.validate().size() == 1);

    Geometry bad{-1.0, 0.0, 0.55, 15.0};
    CHECK(bad.validate().size() == 2);
}

TEST_CASE("system factor invariants") {
    CHECK(SystemFactor{Frequency{25.0}, 1e-6}.validate().empty());
    CHECK(SystemFactor{Frequency{25.0}, 0.0}.validate().size() == 1);
}
