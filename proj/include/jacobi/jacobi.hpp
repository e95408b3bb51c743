#pragma once

#include "cyclotomic.hpp"
#include "forms.hpp"
#include "genus.hpp"
#include "io.hpp"
#include "jacobi_form.hpp"
#include "jet.hpp"
#include "lift.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "series.hpp"
#include "specials.hpp"
#include "suites.hpp"
#include "ylaurent.hpp"
#include "yrational.hpp"
