#ifndef PEANO_PEANO_HPP
#define PEANO_PEANO_HPP

#include "peano/syntax.hpp"
#include "peano/text.hpp"
#include "peano/kernel.hpp"
#include "peano/proof_file.hpp"
#include "peano/arith.hpp"
#include "peano/goldbach.hpp"
#include "peano/models.hpp"
#include "peano/eval.hpp"

#endif  // PEANO_PEANO_HPP
