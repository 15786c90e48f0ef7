#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "hemb/flat_term.hpp"
#include "hemb/syntactic.hpp"
#include "hemb/verdict.hpp"

namespace hemb {

/// The equations of the flattened embedding procedure. Each evaluation step
/// fires exactly one of them.
enum class Equation : std::uint8_t {
  SharpSharp,        // # <| # = true
  AppSharp,          // F[L] <| # = false
  DiveRootMismatch,  // T <| F[L] = any(T, L) if root(T) != F
  CoupleFree,        // F[L1] <| F[L2] = any(F[L1], L2) or all(L1, L2)
  CoupleC,           // F[U,V] <| F[X,Y] = any(...) or (U<|X and V<|Y) or (U<|Y and V<|X)
  CoupleA,           // = any(F[L1], L2) or all_A(L1, L2)
  CoupleAC,          // = any(F[L1], L2) or all_AC(L1, L2)
  AnyNil,            // any(U, nil) = false
  AnyCons,           // any(U, V:L) = U <| V or any(U, L)
  AllNilNil,         // all(nil, nil) = true
  AllMismatch,       // all(L1, L2) = false  [owise: exactly one list is nil]
  AllCons,           // all(U:L1, V:L2) = U <| V and all(L1, L2)
  AllANil,           // all_A(nil, L) = true
  AllAConsNil,       // all_A(U:L, nil) = false
  AllAConsCons,      // all_A(U:L1, V:L2) = (U <| V and all_A(L1, L2)) or all_A(U:L1, L2)
  AllACNil,          // all_AC(nil, L) = true
  AllACCons,         // all_AC(U:L1, L2) = all_AC_Aux(U:L1, L2, L2)
  AuxNil,            // all_AC_Aux(U:L1, nil, L3) = false
  AuxCons,           // all_AC_Aux(U:L1, V:L2, L3) = (U <| V and all_AC(L1, remove(V, L3))) or all_AC_Aux(U:L1, L2, L3)
  RemoveNil,         // remove(U, nil) = nil
  RemoveCons,        // remove(U, V:L) = if U = V then L else V : remove(U, L)
};

inline constexpr std::size_t kEquationCount = 21;

struct EquationInfo {
  Equation id;
  std::string_view name;
  std::string_view text;
};

/// The full equation inventory, in declaration order.
const std::array<EquationInfo, kEquationCount>& equation_table();

struct CallCounter {
  std::uint64_t embed_calls = 0;
  std::uint64_t helper_calls = 0;
  std::array<std::uint64_t, kEquationCount> fired{};

  bool dominated_by(const CallCounter& o) const {
    return embed_calls <= o.embed_calls && helper_calls <= o.helper_calls;
  }
};

struct MetaResult {
  bool holds = false;
  CallCounter counter;
};

/// Strict (`and` / `or` evaluate both operands) or short-circuit
/// (`and-then` / `or-else`) boolean evaluation.
enum class MetaVariant { Strict, ShortCircuit };

/// Canonical flattened `#`-instance of `t` over the universal signature.
FlatTerm to_meta(const Term& t, const Signature& sig);

/// Strict evaluation. Inputs must be canonical and ground.
MetaResult embeds_ml(const FlatTerm& s, const FlatTerm& t);
/// Short-circuit evaluation; same verdict as `embeds_ml`.
MetaResult embeds_sml(const FlatTerm& s, const FlatTerm& t);

MetaResult embeds_meta(const FlatTerm& s, const FlatTerm& t, MetaVariant v,
                       const Budget& budget = {});

/// Engine entry point: `to_meta` on both sides, then evaluation. Only a
/// wall-clock budget can produce Timeout.
Verdict embeds_flat(const EmbedGoal& goal, MetaVariant v, const Budget& budget = {});

/// `all_A` with the leftmost-greedy choice: each element is paired with
/// the first position that embeds it. Test oracle for `all_A`.
bool all_a_greedy(std::span<const FlatTerm> l1, std::span<const FlatTerm> l2);

/// The `all_A` / `all_AC` list predicates in isolation (short-circuit).
bool all_a(std::span<const FlatTerm> l1, std::span<const FlatTerm> l2);
bool all_ac(std::span<const FlatTerm> l1, std::span<const FlatTerm> l2);

}  // namespace hemb
