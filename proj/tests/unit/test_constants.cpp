#include <doctest.h>

#include "tlent/constants.hpp"

using namespace tlent;

TEST_CASE("constants against independent values") {
  const long bits = 256;
  const Real tol(bits, std::string("1e-55"));
  CHECK(abs(glaisher(bits) - Real(bits, std::string("1.28242712910062263687534256886979172776768892732500119206374"))) <
        tol);
  CHECK(abs(gamma_third(bits) -
            Real(bits, std::string("2.67893853470774763365569294097467764412868937795730110095043"))) < tol);
  CHECK(abs(gamma_sixth(bits) -
            Real(bits, std::string("5.56631600178023520425009689520772611139879911487285346161675"))) < tol);
}

TEST_CASE("self-test passes across precisions") {
  for (long bits : {64L, 200L, 512L, 1500L}) {
    const ConstantSelfTest t = self_test_constants(bits);
    CHECK_MESSAGE(t.ok(pow(Real(bits, 2L), Real(bits, 32 - bits))), "bits=", bits);
  }
}

TEST_CASE("Glaisher constant is memoised per precision") {
  const Real a = glaisher(300);
  const Real b = glaisher(300);
  CHECK(a == b);
  CHECK(a.bits() == 300);
}
