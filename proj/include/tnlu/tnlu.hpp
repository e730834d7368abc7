#pragma once

// Exact LU decomposition of totally nonnegative matrices.

#include "tnlu/determinant.hpp"
#include "tnlu/echelon.hpp"
#include "tnlu/error.hpp"
#include "tnlu/explicit_lu.hpp"
#include "tnlu/identities.hpp"
#include "tnlu/index_set.hpp"
#include "tnlu/matrix.hpp"
#include "tnlu/mclass.hpp"
#include "tnlu/neville.hpp"
#include "tnlu/scalar.hpp"
#include "tnlu/text_format.hpp"
#include "tnlu/tnn.hpp"
