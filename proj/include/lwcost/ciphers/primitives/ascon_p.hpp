#pragma once
#include "../../core/bytes.hpp"
#include "../counters.hpp"
#include <array>
#include <bit>
#include <string>

namespace lwcost::prim {

using AsconState = std::array<uint64_t, 5>;

inline void
ascon_round(AsconState& x, uint8_t c)
{
  x[2] ^= c;
  x[0] ^= x[4];
  x[4] ^= x[3];
  x[2] ^= x[1];
  const uint64_t t0 = ~x[0] & x[1], t1 = ~x[1] & x[2], t2 = ~x[2] & x[3],
                 t3 = ~x[3] & x[4], t4 = ~x[4] & x[0];
  x[0] ^= t1;
  x[1] ^= t2;
  x[2] ^= t3;
  x[3] ^= t4;
  x[4] ^= t0;
  x[1] ^= x[0];
  x[0] ^= x[4];
  x[3] ^= x[2];
  x[2] = ~x[2];
  x[0] ^= std::rotr(x[0], 19) ^ std::rotr(x[0], 28);
  x[1] ^= std::rotr(x[1], 61) ^ std::rotr(x[1], 39);
  x[2] ^= std::rotr(x[2], 1) ^ std::rotr(x[2], 6);
  x[3] ^= std::rotr(x[3], 10) ^ std::rotr(x[3], 17);
  x[4] ^= std::rotr(x[4], 7) ^ std::rotr(x[4], 41);
}

inline const char*
ascon_label(int rounds)
{
  static const char* labels[] = { "ascon_p0", "ascon_p1", "ascon_p2",
                                  "ascon_p3", "ascon_p4", "ascon_p5",
                                  "ascon_p6", "ascon_p7", "ascon_p8",
                                  "ascon_p9", "ascon_p10", "ascon_p11",
                                  "ascon_p12" };
  return labels[rounds];
}

// p^rounds: the last `rounds` rounds of the 12-round schedule.
inline void
ascon_p(AsconState& x, int rounds, OpCounters* c = nullptr)
{
  if (rounds < 1 || rounds > 12)
    throw ParameterError("ascon_p rounds must be in 1..12");
  tick(c, ascon_label(rounds));
  for (int r = 12 - rounds; r < 12; r++)
    ascon_round(x, uint8_t((0xf - r) << 4 | r));
}

// Byte view: 40 bytes, words big-endian.
inline void
ascon_p(std::span<uint8_t> state, int rounds, OpCounters* c = nullptr)
{
  require_size(state, 40, "ascon state");
  AsconState x;
  for (int i = 0; i < 5; i++)
    x[i] = load_be64(state.data() + 8 * i);
  ascon_p(x, rounds, c);
  for (int i = 0; i < 5; i++)
    store_be64(state.data() + 8 * i, x[i]);
}

}
