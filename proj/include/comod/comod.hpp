#pragma once

#include "comod/bitset.hpp"
#include "comod/cl_labeling.hpp"
#include "comod/error.hpp"
#include "comod/families.hpp"
#include "comod/groups.hpp"
#include "comod/io.hpp"
#include "comod/lattice.hpp"
#include "comod/modularity.hpp"
#include "comod/poset.hpp"
#include "comod/topology.hpp"
