#include "ibc/audit.hpp"

#include <cstdint>
#include <sstream>

#include "ibc/modmath.hpp"

namespace ibc::audit {

namespace {

using u64 = std::uint64_t;
constexpr u64 kM = 257;

// Reference side: machine-word arithmetic, no shared code with the library.
u64 naive_pow(u64 base, u64 exp) {
  u64 acc = 1;
  for (u64 k = 0; k < exp; ++k) acc = acc * base % kM;
  return acc;
}

u64 exhaustive_inv(u64 a) {
  for (u64 x = 1; x < kM; ++x) {
    if (a % kM * x % kM == 1) return x;
  }
  return 0;
}

std::string exhaustive_root(u64 value, u64 k) {
  for (u64 r = 0; r < kM; ++r) {
    if (naive_pow(r, k) == value % kM) return std::to_string(r);
  }
  return "none";
}

std::string str(const FieldElem& e) { return e.value().str(); }
std::string str(u64 x) { return std::to_string(x); }

}  // namespace

std::vector<AuditEntry> worked_example_audit() {
  const Modulus m = Modulus::prime(kM);
  const auto e = [&](long long x) { return m.elem(x); };
  const FieldElem p = e(3);

  std::vector<AuditEntry> out;
  const std::string pow_method = "square-and-multiply vs repeated multiplication";
  const std::string inv_method = "extended Euclid vs exhaustive search";
  const std::string mul_method = "field product vs machine-word product";

  out.push_back({"residue_test", "3^64 mod 257", "1", str(modmath::mod_pow(p, 64, m)), str(naive_pow(3, 64)),
                 pow_method});
  out.push_back({"root_candidate", "3^65 mod 257", "16", str(modmath::mod_pow(p, 65, m)), str(naive_pow(3, 65)),
                 pow_method});
  out.push_back({"root_check", "16^4 mod 257", "3", str(modmath::mod_pow(e(16), 4, m)), str(naive_pow(16, 4)),
                 pow_method});
  {
    auto root = modmath::kth_root_algebraic(p, 4, m);
    std::string a = root.found() ? str(*root.root) : (root.status == modmath::RootStatus::Absent ? "none" : "unknown");
    out.push_back({"fourth_root", "r with r^4 = 3 mod 257", "16", a, exhaustive_root(3, 4),
                   "residue test with root extraction vs exhaustive search"});
  }
  out.push_back({"integer_power", "3^35 mod 257", "183", str(modmath::mod_pow(p, 35, m)), str(naive_pow(3, 35)),
                 pow_method});
  out.push_back({"masked_power_claimed", "183 * 113 mod 257", "81", str(m.mul(e(183), e(113))),
                 str(183 * 113 % kM), mul_method});
  out.push_back({"masked_power", "3^35 * 113 mod 257", "81", str(m.mul(modmath::mod_pow(p, 35, m), e(113))),
                 str(naive_pow(3, 35) * 113 % kM), pow_method});
  out.push_back({"inverse_143", "143^-1 mod 257", "36", str(modmath::mod_inv(e(143), m)), str(exhaustive_inv(143)),
                 inv_method});
  out.push_back({"inverse_check", "143 * 36 mod 257", "1", str(m.mul(e(143), e(36))), str(143 * 36 % kM),
                 mul_method});
  out.push_back({"reciprocal_t", "4 / 143 mod 257", "144", str(m.mul(e(4), modmath::mod_inv(e(143), m))),
                 str(4 * exhaustive_inv(143) % kM), inv_method});
  out.push_back({"product_claimed", "197 * 144 mod 257", "53", str(m.mul(e(197), e(144))), str(197 * 144 % kM),
                 mul_method});

  // s1 = (p^t + q1 phi + q2 psi) / t with phi = -2, psi = 4, t = 143/4.
  const auto s1_lib = [&](const FieldElem& pt) {
    FieldElem num = m.add(pt, m.add(m.mul(e(12), e(-2)), m.mul(e(35), e(4))));
    return m.mul(num, modmath::mod_inv(modmath::reduce_rational(35, 3, 4, m), m));
  };
  const auto s1_ref = [&](u64 pt) {
    u64 num = (pt + kM * 12 - 24 + 140) % kM;
    u64 t_image = (35 * 4 + 3) * exhaustive_inv(4) % kM;
    return num * exhaustive_inv(t_image) % kM;
  };
  out.push_back({"s1_forced_inputs", "s1 with p^t = 81, phi = -2, psi = 4", "53", str(s1_lib(e(81))),
                 str(s1_ref(81)), inv_method});
  out.push_back({"s1_recomputed", "s1 with p^t = 3^35 * 113, phi = -2, psi = 4", "53",
                 str(s1_lib(m.mul(modmath::mod_pow(p, 35, m), e(113)))), str(s1_ref(naive_pow(3, 35) * 113 % kM)),
                 pow_method + "; " + inv_method});
  return out;
}

std::string format_audit(const std::vector<AuditEntry>& entries) {
  std::ostringstream out;
  out << "id\texpression\tclaimed\tlibrary\treference\toracles\tclaim\tmethod\n";
  for (const auto& a : entries) {
    out << a.id << '\t' << a.expression << '\t' << a.claimed << '\t' << a.oracle_a << '\t' << a.oracle_b << '\t'
        << (a.oracles_agree() ? "agree" : "DISAGREE") << '\t' << (a.claim_holds() ? "holds" : "fails") << '\t'
        << a.method << '\n';
  }
  return out.str();
}

}  // namespace ibc::audit
