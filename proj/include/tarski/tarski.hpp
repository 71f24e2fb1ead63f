#pragma once

#include "tarski/axiom.hpp"
#include "tarski/cartesian.hpp"
#include "tarski/engine.hpp"
#include "tarski/finite.hpp"
#include "tarski/klein.hpp"
#include "tarski/models.hpp"
#include "tarski/rational.hpp"
#include "tarski/report.hpp"
#include "tarski/rng.hpp"
#include "tarski/scalar.hpp"
#include "tarski/vec.hpp"
