#pragma once

#include "markovseq/bigint.hpp"
#include "markovseq/diatomic.hpp"
#include "markovseq/spectrum.hpp"
#include "markovseq/surd.hpp"
#include "markovseq/theorems.hpp"
#include "markovseq/tree.hpp"
#include "markovseq/words.hpp"
