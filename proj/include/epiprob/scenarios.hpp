#pragma once

#include "epiprob/measures.hpp"

namespace epiprob {
namespace scenarios {

// Two-run waking puzzle for agent "sb": on heads (run r1) one waking, on
// tails (run r2) two indistinguishable wakings. States: b before the toss,
// w while woken, a after the experiment. beta is the prior of r1.
ProbabilisticSystem sleeping_beauty(const Rat& beta = Rat(1, 2));

// Variant in which the agent may be told, at the first waking, that it is
// the first day (state M instead of w). With probability alpha the telling
// happens (runs r1L and r2L), otherwise the plain runs r1 and r2 play out.
ProbabilisticSystem sleeping_beauty_learning(const Rat& alpha = Rat(1, 2));

// Alice watches two coin tosses as they happen (first coin biased 2/3 to
// heads, second fair); Bob sees a clock tick, then learns the first
// outcome. Both agents are synchronous with perfect recall.
ProbabilisticSystem two_coins();

// A prisoner watches two wall clocks, A reading 6:00 and B reading 7:00 at
// the start, knowing one of them is right but not which. If a fair coin
// lands heads the lights go out at true midnight. Time is discretized to
// half-hour steps; runs r1/r2 have clock A right (heads/tails), r3/r4 have
// clock B right. The prisoner's local state is "(A-reading,B-reading,light)".
ProbabilisticSystem prisoner_clocks();

// The synchronous twist: clock A is known to show the true time, the coin
// controls whether the lights go out when the jailer's clock reads
// midnight, and the jailer's clock is A or B with probability 1/2 each.
// Once the lights are out the local state also records the A-reading at
// which that happened, which the watching prisoner remembers.
ProbabilisticSystem prisoner_clocks_synchronous();

// The two-run waking puzzle with prior p on heads (run r1, one waking) and
// `wakeups` wakings on tails (run r2).
ProbabilisticSystem extreme_variant(const Rat& p = Rat(99, 100), long wakeups = 9900);

// An observer sees a fair coin land at time 1, then forgets the outcome at
// time 2 while still knowing the time. Synchronous, no perfect recall.
ProbabilisticSystem forgetful_coin();

}  // namespace scenarios
}  // namespace epiprob
