#pragma once

#include "yqc/ast.hpp"
#include "yqc/attributes.hpp"
#include "yqc/config.hpp"
#include "yqc/diagnostics.hpp"
#include "yqc/gates.hpp"
#include "yqc/ir_json.hpp"
#include "yqc/layout.hpp"
#include "yqc/lexer.hpp"
#include "yqc/parser.hpp"
#include "yqc/pipeline.hpp"
#include "yqc/pretty_print.hpp"
#include "yqc/qasm.hpp"
#include "yqc/registers.hpp"
#include "yqc/render.hpp"
#include "yqc/render_text.hpp"
#include "yqc/scene.hpp"
#include "yqc/svg.hpp"
#include "yqc/tikz.hpp"
