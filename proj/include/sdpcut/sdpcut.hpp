#pragma once

#include "certificate.hpp"
#include "chromatic.hpp"
#include "decompose.hpp"
#include "embedding.hpp"
#include "error.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "harness.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "report.hpp"
#include "verify.hpp"
