#include "cee/minilang/ast.hpp"

#include <sstream>

#include "cee/error.hpp"

namespace cee::minilang {

std::string type_name(Type t) {
    switch (t) {
        case Type::Int: return "int";
        case Type::Bool: return "boolean";
        case Type::Str: return "String";
        case Type::IntArray: return "int[]";
        case Type::StrArray: return "String[]";
    }
    return "?";
}

Type type_from_name(const std::string& name) {
    if (name == "int") return Type::Int;
    if (name == "boolean") return Type::Bool;
    if (name == "String") return Type::Str;
    if (name == "int[]") return Type::IntArray;
    if (name == "String[]") return Type::StrArray;
    throw FormatError("unknown type name '" + name + "'");
}

std::string binop_name(BinOp op) {
    switch (op) {
        case BinOp::Add: return "+";
        case BinOp::Sub: return "-";
        case BinOp::Mul: return "*";
        case BinOp::Div: return "/";
        case BinOp::Mod: return "%";
        case BinOp::Eq: return "==";
        case BinOp::Ne: return "!=";
        case BinOp::Lt: return "<";
        case BinOp::Le: return "<=";
        case BinOp::Gt: return ">";
        case BinOp::Ge: return ">=";
        case BinOp::And: return "&&";
        case BinOp::Or: return "||";
    }
    return "?";
}

std::string unaryop_name(UnaryOp op) {
    switch (op) {
        case UnaryOp::Neg: return "-";
        case UnaryOp::Not: return "!";
        case UnaryOp::Plus: return "+";
    }
    return "?";
}

ExprPtr clone(const Expr& e) {
    auto out = std::make_unique<Expr>();
    out->kind = e.kind;
    out->span = e.span;
    out->int_val = e.int_val;
    out->bool_val = e.bool_val;
    out->str_val = e.str_val;
    out->name = e.name;
    out->uop = e.uop;
    out->bop = e.bop;
    out->elem_type = e.elem_type;
    if (e.a) out->a = clone(*e.a);
    if (e.b) out->b = clone(*e.b);
    for (const auto& arg : e.args) out->args.push_back(clone(*arg));
    return out;
}

StmtPtr clone(const Stmt& s) {
    auto out = std::make_unique<Stmt>();
    out->kind = s.kind;
    out->span = s.span;
    for (const auto& st : s.stmts) out->stmts.push_back(clone(*st));
    out->decl_type = s.decl_type;
    out->name = s.name;
    if (s.index) out->index = clone(*s.index);
    out->aop = s.aop;
    if (s.value) out->value = clone(*s.value);
    out->delta = s.delta;
    if (s.cond) out->cond = clone(*s.cond);
    if (s.then_branch) out->then_branch = clone(*s.then_branch);
    if (s.else_branch) out->else_branch = clone(*s.else_branch);
    if (s.for_init) out->for_init = clone(*s.for_init);
    if (s.for_update) out->for_update = clone(*s.for_update);
    if (s.body) out->body = clone(*s.body);
    return out;
}

Function clone(const Function& f) {
    Function out;
    out.name = f.name;
    out.return_type = f.return_type;
    out.params = f.params;
    out.body = clone(*f.body);
    out.span = f.span;
    return out;
}

namespace {

bool eq_opt(const ExprPtr& a, const ExprPtr& b) {
    if (!a != !b) return false;
    return !a || ast_equal(*a, *b);
}

bool eq_opt(const StmtPtr& a, const StmtPtr& b) {
    if (!a != !b) return false;
    return !a || ast_equal(*a, *b);
}

}  // namespace

bool ast_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprKind::IntLit: return a.int_val == b.int_val;
        case ExprKind::StrLit: return a.str_val == b.str_val;
        case ExprKind::BoolLit: return a.bool_val == b.bool_val;
        case ExprKind::VarRef: return a.name == b.name;
        case ExprKind::Unary: return a.uop == b.uop && eq_opt(a.a, b.a);
        case ExprKind::Binary:
            return a.bop == b.bop && eq_opt(a.a, b.a) && eq_opt(a.b, b.b);
        case ExprKind::Index: return eq_opt(a.a, b.a) && eq_opt(a.b, b.b);
        case ExprKind::Call: {
            if (a.name != b.name || !eq_opt(a.a, b.a)) return false;
            if (a.args.size() != b.args.size()) return false;
            for (size_t i = 0; i < a.args.size(); ++i) {
                if (!ast_equal(*a.args[i], *b.args[i])) return false;
            }
            return true;
        }
        case ExprKind::Member: return a.name == b.name && eq_opt(a.a, b.a);
        case ExprKind::NewArray:
            return a.elem_type == b.elem_type && eq_opt(a.b, b.b);
    }
    return false;
}

bool ast_equal(const Stmt& a, const Stmt& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case StmtKind::Block: {
            if (a.stmts.size() != b.stmts.size()) return false;
            for (size_t i = 0; i < a.stmts.size(); ++i) {
                if (!ast_equal(*a.stmts[i], *b.stmts[i])) return false;
            }
            return true;
        }
        case StmtKind::VarDecl:
            return a.decl_type == b.decl_type && a.name == b.name &&
                   eq_opt(a.value, b.value);
        case StmtKind::Assign:
            return a.name == b.name && a.aop == b.aop &&
                   eq_opt(a.index, b.index) && eq_opt(a.value, b.value);
        case StmtKind::Update: return a.name == b.name && a.delta == b.delta;
        case StmtKind::If:
            return eq_opt(a.cond, b.cond) && eq_opt(a.then_branch, b.then_branch) &&
                   eq_opt(a.else_branch, b.else_branch);
        case StmtKind::For:
            return eq_opt(a.for_init, b.for_init) && eq_opt(a.cond, b.cond) &&
                   eq_opt(a.for_update, b.for_update) && eq_opt(a.body, b.body);
        case StmtKind::While:
            return eq_opt(a.cond, b.cond) && eq_opt(a.body, b.body);
        case StmtKind::Return: return eq_opt(a.value, b.value);
        case StmtKind::ExprStmt: return eq_opt(a.value, b.value);
    }
    return false;
}

bool ast_equal(const Function& a, const Function& b) {
    if (a.name != b.name || a.return_type != b.return_type) return false;
    if (a.params.size() != b.params.size()) return false;
    for (size_t i = 0; i < a.params.size(); ++i) {
        if (a.params[i].type != b.params[i].type ||
            a.params[i].name != b.params[i].name) {
            return false;
        }
    }
    return ast_equal(*a.body, *b.body);
}

namespace {

int precedence(BinOp op) {
    switch (op) {
        case BinOp::Or: return 1;
        case BinOp::And: return 2;
        case BinOp::Eq:
        case BinOp::Ne: return 3;
        case BinOp::Lt:
        case BinOp::Le:
        case BinOp::Gt:
        case BinOp::Ge: return 4;
        case BinOp::Add:
        case BinOp::Sub: return 5;
        case BinOp::Mul:
        case BinOp::Div:
        case BinOp::Mod: return 6;
    }
    return 0;
}

std::string escape_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

class Printer {
public:
    std::string print(const Function& f) {
        out_.str("");
        out_ << "public " << type_name(f.return_type) << " " << f.name << "(";
        for (size_t i = 0; i < f.params.size(); ++i) {
            if (i) out_ << ", ";
            out_ << type_name(f.params[i].type) << " " << f.params[i].name;
        }
        out_ << ") ";
        print_block(*f.body, 0);
        out_ << "\n";
        return out_.str();
    }

    std::string print_expr_top(const Expr& e) {
        out_.str("");
        expr(e, 0);
        return out_.str();
    }

private:
    std::ostringstream out_;

    void indent(int level) {
        for (int i = 0; i < level; ++i) out_ << "  ";
    }

    void print_block(const Stmt& block, int level) {
        out_ << "{\n";
        for (const auto& s : block.stmts) {
            stmt(*s, level + 1);
        }
        indent(level);
        out_ << "}";
    }

    // Statement fragment without trailing ';' (for-clause form).
    void simple_stmt(const Stmt& s) {
        switch (s.kind) {
            case StmtKind::VarDecl:
                out_ << type_name(s.decl_type) << " " << s.name;
                if (s.value) {
                    out_ << " = ";
                    expr(*s.value, 0);
                }
                break;
            case StmtKind::Assign:
                out_ << s.name;
                if (s.index) {
                    out_ << "[";
                    expr(*s.index, 0);
                    out_ << "]";
                }
                switch (s.aop) {
                    case AssignOp::Set: out_ << " = "; break;
                    case AssignOp::Add: out_ << " += "; break;
                    case AssignOp::Sub: out_ << " -= "; break;
                    case AssignOp::Mul: out_ << " *= "; break;
                    case AssignOp::Div: out_ << " /= "; break;
                    case AssignOp::Mod: out_ << " %= "; break;
                }
                expr(*s.value, 0);
                break;
            case StmtKind::Update:
                out_ << s.name << (s.delta > 0 ? "++" : "--");
                break;
            default:
                break;
        }
    }

    void stmt(const Stmt& s, int level) {
        indent(level);
        switch (s.kind) {
            case StmtKind::Block:
                print_block(s, level);
                out_ << "\n";
                return;
            case StmtKind::VarDecl:
            case StmtKind::Assign:
            case StmtKind::Update:
                simple_stmt(s);
                out_ << ";\n";
                return;
            case StmtKind::If:
                out_ << "if (";
                expr(*s.cond, 0);
                out_ << ") ";
                print_block(*s.then_branch, level);
                if (s.else_branch) {
                    out_ << " else ";
                    print_block(*s.else_branch, level);
                }
                out_ << "\n";
                return;
            case StmtKind::For:
                out_ << "for (";
                if (s.for_init) simple_stmt(*s.for_init);
                out_ << "; ";
                if (s.cond) expr(*s.cond, 0);
                out_ << "; ";
                if (s.for_update) simple_stmt(*s.for_update);
                out_ << ") ";
                print_block(*s.body, level);
                out_ << "\n";
                return;
            case StmtKind::While:
                out_ << "while (";
                expr(*s.cond, 0);
                out_ << ") ";
                print_block(*s.body, level);
                out_ << "\n";
                return;
            case StmtKind::Return:
                out_ << "return";
                if (s.value) {
                    out_ << " ";
                    expr(*s.value, 0);
                }
                out_ << ";\n";
                return;
            case StmtKind::ExprStmt:
                expr(*s.value, 0);
                out_ << ";\n";
                return;
        }
    }

    // `parent_prec` controls parenthesization; children at lower precedence
    // are wrapped.
    void expr(const Expr& e, int parent_prec) {
        switch (e.kind) {
            case ExprKind::IntLit: out_ << e.int_val; return;
            case ExprKind::StrLit: out_ << escape_string(e.str_val); return;
            case ExprKind::BoolLit: out_ << (e.bool_val ? "true" : "false"); return;
            case ExprKind::VarRef: out_ << e.name; return;
            case ExprKind::Unary: {
                out_ << unaryop_name(e.uop);
                expr(*e.a, 7);
                return;
            }
            case ExprKind::Binary: {
                int prec = precedence(e.bop);
                bool paren = prec < parent_prec;
                if (paren) out_ << "(";
                expr(*e.a, prec);
                out_ << " " << binop_name(e.bop) << " ";
                // +1 keeps left associativity on equal precedence
                expr(*e.b, prec + 1);
                if (paren) out_ << ")";
                return;
            }
            case ExprKind::Index:
                expr(*e.a, 8);
                out_ << "[";
                expr(*e.b, 0);
                out_ << "]";
                return;
            case ExprKind::Call:
                expr(*e.a, 8);
                out_ << "." << e.name << "(";
                for (size_t i = 0; i < e.args.size(); ++i) {
                    if (i) out_ << ", ";
                    expr(*e.args[i], 0);
                }
                out_ << ")";
                return;
            case ExprKind::Member:
                expr(*e.a, 8);
                out_ << "." << e.name;
                return;
            case ExprKind::NewArray: {
                std::string base =
                    e.elem_type == Type::IntArray || e.elem_type == Type::Int ? "int"
                                                                              : "String";
                out_ << "new " << base << "[";
                expr(*e.b, 0);
                out_ << "]";
                return;
            }
        }
    }
};

}  // namespace

std::string pretty_print(const Function& f) {
    Printer p;
    return p.print(f);
}

std::string pretty_print(const Expr& e) {
    Printer p;
    return p.print_expr_top(e);
}

}  // namespace cee::minilang
