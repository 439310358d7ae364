#pragma once

#include "flawshift/bijections.hpp"
#include "flawshift/checks.hpp"
#include "flawshift/factors.hpp"
#include "flawshift/flip_sequence.hpp"
#include "flawshift/generator.hpp"
#include "flawshift/oracle.hpp"
#include "flawshift/path.hpp"
