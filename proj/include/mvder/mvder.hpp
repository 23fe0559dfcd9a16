#ifndef MVDER_MVDER_HPP
#define MVDER_MVDER_HPP

#include "mvder/algebra.hpp"
#include "mvder/chang.hpp"
#include "mvder/der_lattice.hpp"
#include "mvder/derivations.hpp"
#include "mvder/expr.hpp"
#include "mvder/json_io.hpp"
#include "mvder/poset.hpp"
#include "mvder/properties.hpp"
#include "mvder/structure.hpp"

#endif  // MVDER_MVDER_HPP
