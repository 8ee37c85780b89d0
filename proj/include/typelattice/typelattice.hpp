#pragma once

// Umbrella header: the whole library.

#include "dsl.hpp"
#include "errors.hpp"
#include "ext_oracle.hpp"
#include "extended_nat.hpp"
#include "generators.hpp"
#include "poset_embed.hpp"
#include "poset_io.hpp"
#include "prime_sets.hpp"
#include "primes.hpp"
#include "selftest.hpp"
#include "separation.hpp"
#include "session.hpp"
#include "type_lattice.hpp"
