#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fcy/quiver.hpp"
#include "fcy/rep.hpp"

using namespace fcy;

TEST_SUITE("quiver") {

TEST_CASE("construction validates") {
  CHECK_THROWS(Quiver(2, {{0, 2}}));           // out of range
  CHECK_THROWS(Quiver(3, {{0, 1}}));           // disconnected
  CHECK(Quiver::linear(3).acyclic());
  CHECK_FALSE(Quiver::cycle(2).acyclic());
  CHECK_FALSE(Quiver::cycle(1).acyclic());     // loop
}

TEST_CASE("euler form values") {
  // K_3, d = e = (1,2) -> -1 (wildness witness)
  Quiver k3 = Quiver::kronecker(3);
  CHECK(euler_form(k3, {1, 2}, {1, 2}) == -1);
  // bilinearity: d = 0
  CHECK(euler_form(k3, {0, 0}, {5, 7}) == 0);
  // K_2 regular class is isotropic
  CHECK(euler_form(Quiver::kronecker(2), {1, 1}, {1, 1}) == 0);
  CHECK_THROWS(euler_form(k3, {1}, {1, 2}));
}

TEST_CASE("cartan matrices") {
  IMat a2 = cartan_matrix(Quiver::linear(2));
  CHECK(a2 == IMat(2, 2, {1, 0, 1, 1}));
  CHECK(cartan_matrix(Quiver(1, {})) == IMat(1, 1, {1}));
  IMat k2 = cartan_matrix(Quiver::kronecker(2));
  CHECK(k2 == IMat(2, 2, {1, 0, 2, 1}));
  CHECK_THROWS(cartan_matrix(Quiver::cycle(3)));
}

TEST_CASE("dim Hom(P_y, P_x) = 2 on the Kronecker quiver") {
  // column x of the Cartan matrix has entry 2 at y: two paths x -> y
  CHECK(hom_space(kronecker::p_y(), kronecker::p_x()).dimension() == 2);
}

TEST_CASE("coxeter matrix contract Phi [P_v] = -[I_v]") {
  for (const Quiver& q : {Quiver::linear(2), Quiver::linear(4), Quiver::kronecker(2),
                          Quiver(4, {{0, 1}, {0, 2}, {0, 3}})}) {
    IMat c = cartan_matrix(q);
    IMat phi = coxeter_matrix(c);
    for (int v = 0; v < q.vertex_count(); ++v) {
      IVec p = projective_class(c, v);
      IVec want = Int(-1) * injective_class(c, v);
      CHECK(phi.apply(p) == want);
    }
  }
}

TEST_CASE("A_2 coxeter values") {
  IMat phi = coxeter_matrix(cartan_matrix(Quiver::linear(2)));
  CHECK(phi.apply({1, 1}) == IVec{-1, 0});
  CHECK(matrix_order(phi, 10) == 3);
}

TEST_CASE("coxeter orders") {
  CHECK(matrix_order(coxeter_matrix(cartan_matrix(Quiver::linear(3))), 10) == 4);
  CHECK(matrix_order(IMat::identity(3), 10) == 1);
  CHECK_FALSE(matrix_order(coxeter_matrix(cartan_matrix(Quiver::kronecker(2))), 100).has_value());
}

TEST_CASE("coxeter rejects non-unimodular input") {
  IMat m(2, 2, {2, 0, 0, 1});
  CHECK_THROWS(coxeter_matrix(m));
}

TEST_CASE("euler matrix matches the form and the Cartan contract") {
  for (const Quiver& q : {Quiver::linear(3), Quiver::kronecker(2)}) {
    IMat e = euler_matrix(q);
    IVec d{1, 2, 3}, f{2, 0, 1};
    d.resize(q.vertex_count());
    f.resize(q.vertex_count());
    IVec ed = e.apply(f);
    Int s = 0;
    for (int v = 0; v < q.vertex_count(); ++v) s += d[v] * ed[v];
    CHECK(s == euler_form(q, d, f));
    // E = C^{-T}: chi([P_i], [S_j]) = delta
    IMat c = cartan_matrix(q);
    CHECK((c.transpose() * e).is_identity());
  }
}

TEST_CASE("coxeter is an isometry of the euler form") {
  for (const Quiver& q :
       {Quiver::linear(3), Quiver::kronecker(2), Quiver(4, {{0, 1}, {0, 2}, {1, 3}})}) {
    IMat phi = coxeter_matrix(cartan_matrix(q));
    Rng rng(7);
    for (int it = 0; it < 100; ++it) {
      IVec d = rng.int_vector(q.vertex_count(), -9, 9);
      IVec e = rng.int_vector(q.vertex_count(), -9, 9);
      CHECK(euler_form(q, phi.apply(d), phi.apply(e)) == euler_form(q, d, e));
    }
  }
}

TEST_CASE("serre identity chi(x,y) = -chi(y, Phi x)") {
  Quiver q = Quiver::linear(4);
  IMat phi = coxeter_matrix(cartan_matrix(q));
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    IVec x = rng.int_vector(4, -5, 5);
    IVec y = rng.int_vector(4, -5, 5);
    CHECK(euler_form(q, x, y) == -euler_form(q, y, phi.apply(x)));
  }
}

TEST_CASE("json round trips") {
  Quiver q(3, {{0, 1}, {1, 2}, {0, 2}});
  Quiver q2 = Quiver::from_json(q.to_json());
  CHECK(q == q2);
  CHECK(q.to_json()["vertices"] == 3);

  IMat m = cartan_matrix(q);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

}  // TEST_SUITE
