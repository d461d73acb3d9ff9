#include <doctest.h>

#include "finsum/ledger.hpp"

using namespace finsum;

TEST_CASE("classical charging accumulates per phase") {
  QueryLedger ledger;
  ledger.charge_classical("full_gradient", 0);
  CHECK(ledger.classical_total() == 0);

  ledger.charge_classical("full_gradient", 8);
  CHECK(ledger.classical_total() == 8);
  CHECK(ledger.phase("full_gradient").classical == 8);

  ledger.charge_classical("qvrg", 3);
  ledger.charge_classical("qvrg", 5);
  CHECK(ledger.classical_total() == 16);
  CHECK(ledger.phase("qvrg").classical == 8);
  CHECK(ledger.consistent());

  CHECK_THROWS(ledger.charge_classical("qvrg", -1));
}

TEST_CASE("quantum mean cost formula") {
  // ceil(sqrt(d) * sigma / sigma_hat)
  CHECK(quantum_mean_cost(16, 2.0, 1.0) == 8.0);   // ceil(4*2/1)
  CHECK(quantum_mean_cost(9, 1.0, 2.0) == 2.0);    // ceil(3*0.5)
  CHECK(quantum_mean_cost(4, 0.0, 1.0) == 0.0);    // zero-variance
  CHECK(quantum_mean_cost(7, 1.0, 1.0) == 3.0);    // ceil(sqrt(7))
  CHECK_THROWS(quantum_mean_cost(4, 1.0, 0.0));
  CHECK_THROWS(quantum_mean_cost(4, 1.0, -1.0));
}

TEST_CASE("quantum charging returns the amount and tracks phases") {
  QueryLedger ledger;
  double amount = ledger.charge_quantum_mean("qvrg", 16, 2.0, 1.0);
  CHECK(amount == 8.0);
  CHECK(ledger.quantum_total() == 8.0);

  CHECK(ledger.charge_quantum_mean("qvrg", 9, 0.0, 2.0) == 0.0);
  CHECK(ledger.quantum_total() == 8.0);

  ledger.charge_quantum("full_gradient", 5.0);
  CHECK(ledger.quantum_total() == 13.0);
  CHECK(ledger.phase("full_gradient").quantum == 5.0);
  CHECK(ledger.consistent());
}

TEST_CASE("totals are invariant under the phase breakdown") {
  // The same charges split across different labels give the same totals.
  QueryLedger a, b;
  a.charge_classical("x", 3);
  a.charge_classical("x", 5);
  b.charge_classical("p", 3);
  b.charge_classical("q", 5);
  CHECK(a.classical_total() == b.classical_total());

  a.charge_quantum("x", 2.0);
  a.charge_quantum("x", 7.0);
  b.charge_quantum("p", 2.0);
  b.charge_quantum("q", 7.0);
  CHECK(a.quantum_total() == b.quantum_total());
}

TEST_CASE("csv serialization is one row per phase") {
  QueryLedger ledger;
  ledger.charge_classical("alpha", 4);
  ledger.charge_quantum("alpha", 2.0);
  ledger.charge_classical("beta", 1);
  std::string rows = ledger.csv_rows("run7");
  CHECK(rows == "run7,alpha,4,2\nrun7,beta,1,0\n");
}
