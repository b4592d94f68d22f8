// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <vorder/balanced.hpp>
#include <vorder/equations.hpp>
#include <vorder/generate.hpp>
#include <vorder/graph.hpp>
#include <vorder/io.hpp>
#include <vorder/kcut.hpp>
#include <vorder/limits.hpp>
#include <vorder/oracle.hpp>
#include <vorder/report.hpp>
#include <vorder/scheme.hpp>
#include <vorder/subset.hpp>
#include <vorder/subset_dp.hpp>
