#include "polyctmc/classifier.hpp"

namespace polyctmc {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::Holds:
      return "holds";
    case Truth::Fails:
      return "fails";
    case Truth::Unknown:
      return "unknown";
  }
  return "?";
}

namespace {

const char* kThExplosivity = "Thm th-7";
const char* kCorExplosivity = "Thm cor-infinite-explosivity";
const char* kThRecurrence = "Thm th-8(i)";
const char* kThAbsorption = "Thm th-8(ii)";
const char* kCorRecurrence = "Thm cor-infinite-recurrence(i)";
const char* kCorAbsorption = "Thm cor-infinite-recurrence(ii)";
const char* kThErgodicity = "Thm th-9(i)";
const char* kThQsd = "Thm th-9(ii)";
const char* kCorErgodicity = "Thm cor-infinite-ergodicity(i)";
const char* kCorQsd = "Thm cor-infinite-ergodicity(ii)";
const char* kThImplosivity = "Thm th-10";
const char* kCorImplosivity = "Thm cor-infinite-implosivity";
const char* kThMoments = "Thm th-11";
const char* kCorMoments = "Thm cor-infinite-passagetime";

const char* kInfiniteGapNote = "infinite jump set: only sufficient conditions available";

std::vector<int> fired_among(const ConditionSet& c, std::initializer_list<int> ids) {
  std::vector<int> out;
  for (int i : ids)
    if (c[i]) out.push_back(i);
  return out;
}

Verdict verdict(Truth v, std::vector<int> conds, const char* theorem, std::string note = {}) {
  return Verdict{v, std::move(conds), theorem, std::move(note)};
}

MomentThresholds moments_finite(const Parameters& p, const ConditionSet& c, bool recurrent) {
  MomentThresholds m;
  m.theorem = kThMoments;
  if (!recurrent) {
    m.first_moment = Truth::Fails;
    m.note = "transient chain: return times are infinite with positive probability";
    return m;
  }
  const Rational beta = *p.beta;
  const Rational gamma = p.gamma;

  if (c[3] || c[9] || c[10]) {
    m.exists_all = true;
    m.first_moment = Truth::Holds;
  } else {
    if (c[14]) m.exists_below = beta / (beta - gamma);
    if (c[13]) m.exists_below = Rational(1, 2);
    if (c[16]) m.exists_below = Rational(1);
    if (c[15]) m.fails_above = beta / (beta - gamma);
    if (c[13]) m.fails_above = Rational(1);
    if (c[16]) m.fails_above = Rational(1);
    if (c[11])
      m.first_moment = Truth::Holds;
    else if (c[12])
      m.first_moment = Truth::Fails;
    else
      m.first_moment = Truth::Unknown;
  }
  m.note = "endpoint behaviour at the thresholds is undecided";
  return m;
}

}  // namespace

ClassificationReport classify(const Parameters& p, bool has_absorbing) {
  const ConditionSet c = evaluate_conditions(p);
  ClassificationReport rep;
  rep.used_infinite_jump_theorems = !p.support_finite;

  if (p.support_finite) {
    // Explosivity: explosive with positive probability iff C1 or C2, and
    // almost surely so when there is no absorbing set.
    const bool explosive = c[1] || c[2];
    rep.explosive = verdict(explosive ? Truth::Holds : Truth::Fails, fired_among(c, {1, 2}),
                            kThExplosivity);
    rep.explosive_almost_surely = explosive && !has_absorbing;

    const bool rec = c[3] || c[6];
    if (!has_absorbing) {
      rep.recurrent = verdict(rec ? Truth::Holds : Truth::Fails, fired_among(c, {3, 6}), kThRecurrence);
      rep.transient = verdict(rec ? Truth::Fails : Truth::Holds, fired_among(c, {3, 6}), kThRecurrence);

      if (rec) {
        const bool pos = c[3] || c[9] || c[10] || c[11];
        rep.positive_recurrent =
            verdict(pos ? Truth::Holds : Truth::Fails, fired_among(c, {3, 9, 10, 11}), kThErgodicity);
        rep.null_recurrent =
            verdict(pos ? Truth::Fails : Truth::Holds, fired_among(c, {3, 9, 10, 11}), kThErgodicity);
        if (pos) {
          if (c[17] || c[18])
            rep.exponentially_ergodic = verdict(Truth::Holds, fired_among(c, {17, 18}), kThErgodicity);
          else
            rep.exponentially_ergodic =
                verdict(Truth::Unknown, {}, kThErgodicity,
                        "neither sufficient condition (C17, C18) fired; rate of convergence open");
        } else {
          rep.exponentially_ergodic = verdict(Truth::Fails, {}, kThErgodicity,
                                              "null recurrent: no ergodic stationary distribution");
        }
      } else {
        rep.exponentially_ergodic = verdict(Truth::Fails, {}, kThRecurrence,
                                            "transient: no stationary distribution exists");
      }

      const bool implo = c[18] || c[19];
      rep.implosive = verdict(implo ? Truth::Holds : Truth::Fails, fired_among(c, {18, 19}),
                              kThImplosivity);
      rep.moments = moments_finite(p, c, rec);
    } else {
      const bool absorbed = c[3] || c[6];
      rep.certain_absorption = verdict(absorbed ? Truth::Holds : Truth::Fails,
                                       fired_among(c, {3, 6}), kThAbsorption);
      if (!absorbed) {
        rep.qsd = verdict(Truth::Fails, {}, kThQsd,
                          "absorption is not certain, and a QSD would force it");
      } else if (c[18] || c[19]) {
        rep.qsd = verdict(Truth::Holds, fired_among(c, {18, 19}), kThQsd);
      } else if (!(c[3] || c[9] || c[10] || c[11])) {
        rep.qsd = verdict(Truth::Fails, {}, kThQsd);
      } else {
        rep.qsd = verdict(Truth::Unknown, fired_among(c, {11, 20, 21}), kThQsd,
                          "gap case (C11/C20/C21): neither QSD existence nor Q-process "
                          "ergodicity is known here");
      }
    }
    rep.table1 = table1_cell(p);
    return rep;
  }

  // Infinite jump set: one-sided theorems only.
  if (c[1])
    rep.explosive = verdict(Truth::Holds, fired_among(c, {1}), kCorExplosivity);
  else if (c[3] || c[4] || c[5])
    rep.explosive = verdict(Truth::Fails, fired_among(c, {3, 4, 5}), kCorExplosivity);
  else
    rep.explosive = verdict(Truth::Unknown, {}, kCorExplosivity, kInfiniteGapNote);
  rep.explosive_almost_surely = rep.explosive.value == Truth::Holds && !has_absorbing;

  if (!has_absorbing) {
    if (c[3]) {
      rep.recurrent = verdict(Truth::Holds, {3}, kCorRecurrence);
      rep.transient = verdict(Truth::Fails, {3}, kCorRecurrence);
      rep.positive_recurrent = verdict(Truth::Holds, {3}, kCorErgodicity);
      rep.null_recurrent = verdict(Truth::Fails, {3}, kCorErgodicity);
      if (c[17])
        rep.exponentially_ergodic = verdict(Truth::Holds, {17}, kCorErgodicity);
      else
        rep.exponentially_ergodic = verdict(Truth::Unknown, {}, kCorErgodicity, kInfiniteGapNote);
      MomentThresholds m;
      m.theorem = kCorMoments;
      m.exists_below = Rational(1);
      m.note = "endpoint behaviour at the threshold is undecided";
      rep.moments = m;
    } else if (c[7]) {
      rep.recurrent = verdict(Truth::Fails, {7}, kCorRecurrence);
      rep.transient = verdict(Truth::Holds, {7}, kCorRecurrence);
      rep.positive_recurrent = verdict(Truth::Fails, {7}, kCorRecurrence);
      rep.null_recurrent = verdict(Truth::Fails, {7}, kCorRecurrence);
      rep.exponentially_ergodic =
          verdict(Truth::Fails, {7}, kCorRecurrence, "transient: no stationary distribution exists");
      MomentThresholds m;
      m.theorem = kCorMoments;
      m.first_moment = Truth::Fails;
      m.note = "transient chain: return times are infinite with positive probability";
      rep.moments = m;
    } else {
      rep.recurrent = verdict(Truth::Unknown, {}, kCorRecurrence, kInfiniteGapNote);
      rep.transient = verdict(Truth::Unknown, {}, kCorRecurrence, kInfiniteGapNote);
      rep.positive_recurrent = verdict(Truth::Unknown, {}, kCorErgodicity, kInfiniteGapNote);
      rep.null_recurrent = verdict(Truth::Unknown, {}, kCorErgodicity, kInfiniteGapNote);
      rep.exponentially_ergodic = verdict(Truth::Unknown, {}, kCorErgodicity, kInfiniteGapNote);
    }
    if (c[19])
      rep.implosive = verdict(Truth::Holds, {19}, kCorImplosivity);
    else
      rep.implosive = verdict(Truth::Unknown, {}, kCorImplosivity, kInfiniteGapNote);
  } else {
    if (c[3])
      rep.certain_absorption = verdict(Truth::Holds, {3}, kCorAbsorption);
    else if (c[7])
      rep.certain_absorption = verdict(Truth::Fails, {7}, kCorAbsorption);
    else
      rep.certain_absorption = verdict(Truth::Unknown, {}, kCorAbsorption, kInfiniteGapNote);

    if (c[19])
      rep.qsd = verdict(Truth::Holds, {19}, kCorQsd);
    else if (c[7])
      rep.qsd = verdict(Truth::Fails, {7}, kCorQsd);
    else
      rep.qsd = verdict(Truth::Unknown, {}, kCorQsd, kInfiniteGapNote);
  }
  return rep;
}

std::string table1_cell_for_signs(int R, int sa, int sb, int sg) {
  // Feasibility: beta < gamma always; R = 0 forces gamma = 0 and beta < 0.
  const bool beta_lt_gamma_possible =
      (sb < 0) || (sb == 0 && sg > 0) || (sb > 0 && sg > 0);
  if (!beta_lt_gamma_possible) return "not possible";
  if (R == 0 && (sg != 0 || sb >= 0)) return "not possible";

  if (R == 0) return sa < 0 ? "red" : (sa == 0 ? "blue" : "green");

  if (sa < 0) {
    if (R == 1) return "red (ES)";
    if (R == 2) return "pink";
    return "pink (ES/UQ)";
  }
  if (sa > 0) {
    if (R == 1) return "green (NS/NQ)";
    if (R == 2) return "yellow";
    return "yellow (NS/NQ)";
  }
  // alpha = 0: columns gamma<0 | gamma=0 | beta<0<gamma | beta=0 | beta>0.
  enum { GNeg, GZero, BNeg, BZero, BPos } col;
  if (sg < 0)
    col = GNeg;
  else if (sg == 0)
    col = GZero;
  else
    col = sb < 0 ? BNeg : (sb == 0 ? BZero : BPos);

  if (R == 1) {
    if (col == GNeg) return "red";
    if (col == BPos) return "green (NS/NQ)";
    return "blue (NS/NQ)";
  }
  if (R == 2) {
    if (col == BZero) return "blue";
    if (col == BPos) return "green";
    return "red";
  }
  return col == BPos ? "yellow (NS/NQ)" : "pink (ES/UQ)";
}

std::string table1_cell(const Parameters& p) {
  if (!p.support_finite) throw std::domain_error("parameter table requires a finite jump set");
  return table1_cell_for_signs(p.R, p.alpha.sign(), p.beta ? p.beta->sign() : 0, p.gamma.sign());
}

}  // namespace polyctmc
