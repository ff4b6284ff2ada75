#pragma once

#include "cartesian_packer.hpp"
#include "decomp.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "lex_packer.hpp"
#include "oracle.hpp"
#include "packing.hpp"
#include "products.hpp"
#include "proposition.hpp"
#include "table.hpp"
#include "verifier.hpp"
