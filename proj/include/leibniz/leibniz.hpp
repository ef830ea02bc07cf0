#pragma once

#include "leibniz/algebra.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/document.hpp"
#include "leibniz/error.hpp"
#include "leibniz/exact.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/poly.hpp"
#include "leibniz/reps.hpp"
#include "leibniz/verify.hpp"
