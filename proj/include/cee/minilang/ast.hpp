#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cee/minilang/token.hpp"

namespace cee::minilang {

enum class Type { Int, Bool, Str, IntArray, StrArray };

std::string type_name(Type t);          // "int", "boolean", "String", "int[]", "String[]"
Type type_from_name(const std::string& name);  // throws FormatError on unknown names

enum class ExprKind {
    IntLit,
    StrLit,
    BoolLit,
    VarRef,
    Unary,
    Binary,
    Index,     // base[index]
    Call,      // base.method(args)
    Member,    // base.field (array length)
    NewArray,  // new T[size]
};

enum class UnaryOp { Neg, Not, Plus };

enum class BinOp {
    Add, Sub, Mul, Div, Mod,
    Eq, Ne, Lt, Le, Gt, Ge,
    And, Or,
};

std::string binop_name(BinOp op);
std::string unaryop_name(UnaryOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

// One tagged node type for all expressions; the fields used depend on kind.
struct Expr {
    ExprKind kind;
    Span span;

    int64_t int_val = 0;       // IntLit
    bool bool_val = false;     // BoolLit
    std::string str_val;       // StrLit (decoded value, not the raw lexeme)
    std::string name;          // VarRef, Call method name, Member field name
    UnaryOp uop = UnaryOp::Neg;
    BinOp bop = BinOp::Add;
    ExprPtr a;                 // unary operand / binary lhs / index base / call base
    ExprPtr b;                 // binary rhs / index expr / NewArray size
    std::vector<ExprPtr> args; // Call arguments
    Type elem_type = Type::Int;  // NewArray element type
};

enum class StmtKind {
    Block,
    VarDecl,
    Assign,
    Update,  // i++ / i-- statement
    If,
    For,
    While,
    Return,
    ExprStmt,
};

enum class AssignOp { Set, Add, Sub, Mul, Div, Mod };

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Stmt {
    StmtKind kind;
    Span span;

    std::vector<StmtPtr> stmts;  // Block

    Type decl_type = Type::Int;  // VarDecl
    std::string name;            // VarDecl / Assign / Update target variable
    ExprPtr index;               // Assign to name[index] when non-null
    AssignOp aop = AssignOp::Set;
    ExprPtr value;               // VarDecl init / Assign rhs / Return expr / ExprStmt expr

    int64_t delta = 0;           // Update: +1 or -1

    ExprPtr cond;                // If / While / For condition (For: may be null = true)
    StmtPtr then_branch;         // If
    StmtPtr else_branch;         // If (may be null)
    StmtPtr for_init;            // For (VarDecl/Assign/Update, may be null)
    StmtPtr for_update;          // For (Assign/Update, may be null)
    StmtPtr body;                // For / While body (always a Block after parsing)
};

struct Param {
    Type type;
    std::string name;
    Span span;
};

// A whole submission: exactly one function definition.
struct Function {
    std::string name;
    Type return_type = Type::Int;
    std::vector<Param> params;
    StmtPtr body;  // Block
    Span span;
};

using Ast = Function;

ExprPtr clone(const Expr& e);
StmtPtr clone(const Stmt& s);
Function clone(const Function& f);

// Structural equality ignoring spans.
bool ast_equal(const Expr& a, const Expr& b);
bool ast_equal(const Stmt& a, const Stmt& b);
bool ast_equal(const Function& a, const Function& b);

// Canonical source text (2-space indent, braced bodies). Re-parsing the
// result yields a structurally equal tree.
std::string pretty_print(const Function& f);
std::string pretty_print(const Expr& e);

}  // namespace cee::minilang
