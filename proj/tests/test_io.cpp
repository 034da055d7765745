#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "riordan/commutator.hpp"
#include "riordan/errors.hpp"
#include "riordan/riordan.hpp"
#include "riordan/serialize.hpp"
#include "riordan/series.hpp"

using namespace riordan;
using nlohmann::json;

TEST_CASE("series documents round-trip exactly") {
    Series s(std::vector<Rat>{Rat(1), Rat(0), Rat(-1, 2), Rat(22, 7), Rat(-3)});
    json doc = series_doc(s);
    CHECK(doc["trunc_order"] == 4);
    CHECK(doc["coeffs"][2] == "-1/2");
    CHECK(series_from_doc(doc) == s);
    CHECK(series_from_doc(json::parse(doc.dump())) == s);
}

TEST_CASE("malformed series documents are rejected") {
    json good = series_doc(Series::identity(3));

    json wrong_len = good;
    wrong_len["coeffs"].push_back("5");
    CHECK_THROWS_AS(series_from_doc(wrong_len), InvalidDocument);

    json numeric = good;
    numeric["coeffs"][1] = 0.5;
    CHECK_THROWS_AS(series_from_doc(numeric), InvalidDocument);

    json garbled = good;
    garbled["coeffs"][1] = "2/a";
    CHECK_THROWS_AS(series_from_doc(garbled), InvalidDocument);

    json missing = good;
    missing.erase("trunc_order");
    CHECK_THROWS_AS(series_from_doc(missing), InvalidDocument);

    CHECK_THROWS_AS(series_from_doc(json::array()), InvalidDocument);
    CHECK_THROWS_AS(series_from_doc(json{{"trunc_order", -1}, {"coeffs", json::array()}}),
                    InvalidDocument);
}

TEST_CASE("pair documents round-trip exactly") {
    Series d(std::vector<Rat>{Rat(2), Rat(1, 3)});
    Series h(std::vector<Rat>{Rat(0), Rat(-1)});
    RiordanPair p(d, h);
    json doc = pair_doc(p);
    RiordanPair back = pair_from_doc(doc);
    CHECK(pairs_equal_through(back, p, 1));

    json broken = doc;
    broken["h"]["coeffs"][1] = "0";
    CHECK_THROWS_AS(pair_from_doc(broken), NotInvertibleForComposition);
    json headless = doc;
    headless.erase("h");
    CHECK_THROWS_AS(pair_from_doc(headless), InvalidDocument);
}

TEST_CASE("witness documents re-verify on parse") {
    Series g = add(add(Series::identity(10), Series::monomial(1, 2, 10)),
                   Series::monomial(-1, 4, 10));
    CommutatorWitness w = decompose_diag(RiordanPair(Series::one(10), g), 3);
    json doc = witness_doc(w);
    CHECK(doc["identity_checked"] == true);
    CHECK(doc["verified_order"] == w.verified_order);

    CommutatorWitness back = witness_from_doc(doc);
    CHECK(back.verified_order == w.verified_order);
    CHECK(pairs_equal_through(back.target, w.target, w.verified_order));
    CHECK(witness_holds(back));
}

TEST_CASE("tampered witness documents cannot round-trip") {
    Series g = add(Series::identity(8), Series::monomial(1, 2, 8));
    CommutatorWitness w = decompose_diag(RiordanPair(Series::one(8), g), 2);
    json doc = witness_doc(w);

    json bent = doc;
    bent["right"]["h"]["coeffs"][3] = "99";
    CHECK_THROWS_AS(witness_from_doc(bent), InvalidDocument);

    json unchecked = doc;
    unchecked["identity_checked"] = false;
    CHECK_THROWS_AS(witness_from_doc(unchecked), InvalidDocument);

    json overstated = doc;
    overstated["verified_order"] = 100;
    CHECK_THROWS_AS(witness_from_doc(overstated), InvalidDocument);
}
