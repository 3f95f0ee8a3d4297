#pragma once

#include <hsint/abelian_group.hpp>
#include <hsint/atoms.hpp>
#include <hsint/cayley.hpp>
#include <hsint/cyclotomic.hpp>
#include <hsint/integrality.hpp>
#include <hsint/io.hpp>
