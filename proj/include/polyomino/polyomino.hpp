#pragma once

#include "polyomino/aggregate.hpp"
#include "polyomino/big_count.hpp"
#include "polyomino/board.hpp"
#include "polyomino/count_table.hpp"
#include "polyomino/geometry.hpp"
#include "polyomino/growth.hpp"
#include "polyomino/oracle.hpp"
#include "polyomino/parallel.hpp"
#include "polyomino/pipeline.hpp"
#include "polyomino/point_symmetry.hpp"
#include "polyomino/transfer_matrix.hpp"
