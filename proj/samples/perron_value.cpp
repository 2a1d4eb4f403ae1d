// Exact Markov spectrum values of a few classical periods.

#include <iostream>

#include "markovseq/markovseq.hpp"

int main() {
  using namespace markovseq;
  for (const char* text : {"1,1", "2,2", "2,2,1,1", "2,2,1,1,1,1", "2,2,2,2,1,1"}) {
    const Seq period = parse_seq(text);
    const auto v = markov_value(period);
    std::cout << text << ": " << v.value << " = " << v.value.to_decimal(20)
              << (is_markov_sequence(period) ? "  (below 3)\n" : "\n");
  }
}
