#pragma once

#include "cdsl/error.hpp"
#include "cdsl/cyclo.hpp"
#include "cdsl/words.hpp"
#include "cdsl/series.hpp"
#include "cdsl/products.hpp"
#include "cdsl/maps.hpp"
#include "cdsl/dshuffle.hpp"
#include "cdsl/linalg.hpp"
#include "cdsl/dist.hpp"
#include "cdsl/graded.hpp"
#include "cdsl/zeta_num.hpp"
#include "cdsl/io.hpp"
#include "cdsl/verify.hpp"
