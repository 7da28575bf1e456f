#pragma once

#include "lomlab/chessboard.hpp"
#include "lomlab/chirotope.hpp"
#include "lomlab/circuits.hpp"
#include "lomlab/combinatorics.hpp"
#include "lomlab/engine.hpp"
#include "lomlab/formulas.hpp"
#include "lomlab/neighborly.hpp"
#include "lomlab/sign_matrix.hpp"
#include "lomlab/survey.hpp"
#include "lomlab/travels.hpp"
