// Generated by tools/gen_cases.py; do not edit by hand.

#include "oseenvb/cases.hpp"

#include <cmath>

namespace oseenvb::detail {

void eval_ex1(double x, double y, double nu, double sigma, double p0, ExactPoint& o)
{
    (void)nu; (void)sigma; (void)p0;
    const double t0 = sqrt(nu);
    const double t1 = exp(x - 1);
    const double t2 = M_PI*y;
    const double t3 = sin(t2);
    const double t4 = pow(t3, 2);
    const double t5 = t1*t4;
    const double t6 = -t1;
    const double t7 = t6 + x;
    const double t8 = pow(M_PI, 2);
    const double t9 = 2*t8;
    const double t10 = t4*t9;
    const double t11 = cos(t2);
    const double t12 = pow(t11, 2);
    const double t13 = t12*t9;
    const double t14 = t10*t7 - t13*t7 + t5;
    const double t15 = t1 - 1;
    const double t16 = t15*t4;
    const double t17 = t13*t15 - t16*t9 + t5;
    const double t18 = 4*t8;
    const double t19 = t1 + t18*t7;
    const double t20 = 2*M_PI;
    const double t21 = t11*t3;
    const double t22 = t20*t21;
    const double t23 = pow(x, 3);
    const double t24 = -4*pow(y, 3);
    const double t25 = t22*t7;
    const double t26 = -t16;
    const double t27 = t11*t15;
    const double t28 = t27*t3;
    const double t29 = t20*t28;
    const double t30 = -t5;
    const double t31 = -t29;
    const double t32 = M_PI*t7;
    const double t33 = 2*t2;
    const double t34 = sin(t33);
    const double t35 = (1.0/6.0)*t34;
    const double t36 = t32*t35;
    const double t37 = M_PI*t15*t35;
    const double t38 = cos(t33);
    const double t39 = M_PI*nu;
    const double t40 = 2*t39;
    const double t41 = -t7;
    const double t42 = -t10*t41 + t13*t41 + t5;
    const double t43 = sigma*t29 + t21*t40*(t15*t18 + t6);
    const double t44 = t18*t41;
    o.omega = -t0*t14;
    o.omega_x = -t0*t17;
    o.omega_y = -t0*t19*t22;
    o.p = pow(x, 4) - pow(y, 4);
    o.p_x = 4*t23;
    o.p_y = t24;
    o.u[0] = -t25;
    o.u[1] = t26;
    o.du[0][0] = t29;
    o.du[0][1] = t7*t9*(-t12 + t4);
    o.du[1][0] = t30;
    o.du[1][1] = t31;
    o.beta[0] = -t36;
    o.beta[1] = t26;
    o.dbeta[0][0] = t37;
    o.dbeta[0][1] = -1.0/3.0*t38*t7*t8;
    o.dbeta[1][0] = t30;
    o.dbeta[1][1] = t31;
    o.f[0] = -sigma*t25 - t14*t16 - t19*t21*t40 + 4*t23;
    o.f[1] = nu*t17 - sigma*t16 + t24 + t36*t42;
    o.df[0][0] = -t14*t5 - t16*t17 + t43 + 12*pow(x, 2);
    o.df[0][1] = t20*(-sigma*t12*t32 + M_PI*sigma*t4*t7 - t19*t27*pow(t3, 3) - t28*t42 - t39*(t1*t12 - t12*t44 + t30 + t4*t44));
    o.df[1][0] = nu*t1*(-t10 + t13 + t4) - sigma*t5 + t17*t36 - t37*t42;
    o.df[1][1] = (1.0/3.0)*t11*t19*t3*t34*t7*t8 + (1.0/3.0)*t38*t42*t7*t8 - t43 - 12*pow(y, 2);
}

void eval_ex2a(double x, double y, double nu, double sigma, double p0, ExactPoint& o)
{
    (void)nu; (void)sigma; (void)p0;
    const double t0 = sqrt(nu);
    const double t1 = x - 1;
    const double t2 = pow(t1, 2);
    const double t3 = pow(x, 2);
    const double t4 = pow(y, 2);
    const double t5 = t3*t4;
    const double t6 = y - 1;
    const double t7 = pow(t6, 2);
    const double t8 = t2*t7;
    const double t9 = t1*x;
    const double t10 = 4*t9;
    const double t11 = t4*t7;
    const double t12 = t6*y;
    const double t13 = 4*t12;
    const double t14 = t2*t3;
    const double t15 = t13*t14;
    const double t16 = t2*t4;
    const double t17 = t3*t7;
    const double t18 = 3*t4;
    const double t19 = t18*t7;
    const double t20 = x*y;
    const double t21 = 4*t6;
    const double t22 = t1*y;
    const double t23 = t22*t3;
    const double t24 = t1*t5 + t21*t23;
    const double t25 = 4*t0;
    const double t26 = 3*t3;
    const double t27 = t2*t26;
    const double t28 = 4*t1;
    const double t29 = t6*x;
    const double t30 = t29*t4;
    const double t31 = t28*t30 + t5*t6;
    const double t32 = pow(x, 3);
    const double t33 = pow(y, 3);
    const double t34 = 2*y;
    const double t35 = t34 - 1;
    const double t36 = t14*t34*t35*t6;
    const double t37 = 2*x;
    const double t38 = -t1*t11*t37*(t37 - 1);
    const double t39 = t1*t6;
    const double t40 = t20 + t22 + t29 + t39;
    const double t41 = t20*t39;
    const double t42 = t40*t41;
    const double t43 = 4*t42;
    const double t44 = t13 + t4 + t7;
    const double t45 = t14*t44;
    const double t46 = 2*t45;
    const double t47 = t10 + t3;
    const double t48 = -2*t11*(t2 + t47);
    const double t49 = -t43;
    const double t50 = pow(t6, 2);
    const double t51 = t3*t50;
    const double t52 = pow(t1, 2);
    const double t53 = t50*t52;
    const double t54 = t4*t52;
    const double t55 = t26*t52;
    const double t56 = t20*t50;
    const double t57 = t28*t56 + t31 + t51*y + t53*y + t54*t6 + t55*t6 + t55*y;
    const double t58 = 2*nu;
    const double t59 = t4*t50;
    const double t60 = t3*t52;
    const double t61 = t10*t59 + t13*t60 + t5*t50 + t5*t52 + t50*t54 + t51*t52;
    const double t62 = t59*(t52 + t9);
    const double t63 = t37*t62;
    const double t64 = t62*x;
    const double t65 = t18*t50;
    const double t66 = t20*t52;
    const double t67 = t1*t51 + t1*t65 + t21*t66 + t24 + t53*x + t54*x + t65*x;
    const double t68 = 6*nu*(t22*t50 + t23 + t29*t52 + t3*t39 + t30 + t39*t4 + t56 + t66);
    const double t69 = t59*(t47 + t52);
    const double t70 = t10*t4 + t10*t50 + t13*t3 + t13*t52 + 16*t41 + t5 + t51 + t53 + t54;
    const double t71 = t20*(t12*t52 + t41 + t50*t9 + t53);
    const double t72 = 4*t61;
    o.omega = -2*t0*(t10*t11 + t15 + t2*t5 + t3*t8 + t4*t8 + t5*t7);
    o.omega_x = -t25*(t1*t17 + t1*t19 + t16*x + t19*x + t2*t20*t21 + t24 + t8*x);
    o.omega_y = -t25*(t16*t6 + t17*y + t20*t28*t7 + t27*t6 + t27*y + t31 + t8*y);
    o.p = pow(x, 4) - pow(y, 4);
    o.p_x = 4*t32;
    o.p_y = -4*t33;
    o.u[0] = t36;
    o.u[1] = t38;
    o.du[0][0] = t43;
    o.du[0][1] = t46;
    o.du[1][0] = t48;
    o.du[1][1] = t49;
    o.beta[0] = t36;
    o.beta[1] = t38;
    o.dbeta[0][0] = t43;
    o.dbeta[0][1] = t46;
    o.dbeta[1][0] = t48;
    o.dbeta[1][1] = t49;
    o.f[0] = 2*sigma*t2*t3*t35*t6*y + 4*t32 - 2*t57*t58 - 2*t61*t63;
    o.f[1] = 4*nu*t67 - 2*sigma*t64 - 4*t33 - 2*t36*t61;
    o.df[0][0] = 4*sigma*t1*t40*t6*x*y + 12*t3 - 4*t61*t69 - 4*t63*t67 - 4*t68;
    o.df[0][1] = 2*sigma*t2*t3*t44 - 8*t57*t64 - 2*t58*(6*t60 + t70) - 2*t71*t72;
    o.df[1][0] = 4*nu*(6*t59 + t70) - 2*sigma*t69 - 2*t15*t35*t67 - 2*t42*t72;
    o.df[1][1] = -4*sigma*t71 - 4*t18 - 4*t36*t57 - 4*t45*t61 + 4*t68;
}

void eval_ex2b(double x, double y, double nu, double sigma, double p0, ExactPoint& o)
{
    (void)nu; (void)sigma; (void)p0;
    const double t0 = pow(y, 2);
    const double t1 = 2*t0;
    const double t2 = pow(x, 2);
    const double t3 = x - 1;
    const double t4 = pow(t3, 2);
    const double t5 = t2*t4;
    const double t6 = t1*t5;
    const double t7 = y - 1;
    const double t8 = pow(t7, 2);
    const double t9 = t1*t8;
    const double t10 = t2*t9;
    const double t11 = t0*t8;
    const double t12 = t3*x;
    const double t13 = 8*t12;
    const double t14 = t11*t13;
    const double t15 = t7*y;
    const double t16 = 8*t15;
    const double t17 = t16*t5;
    const double t18 = 2*t8;
    const double t19 = t18*t5;
    const double t20 = t4*t9;
    const double t21 = t11*t5;
    const double t22 = 100*x - 1;
    const double t23 = 4*x;
    const double t24 = t23*t4;
    const double t25 = t11*t22*t24;
    const double t26 = 100*y - 1;
    const double t27 = 4*y;
    const double t28 = t27*t8;
    const double t29 = t26*t28;
    const double t30 = t29*t5;
    const double t31 = 4*t3;
    const double t32 = t2*t31;
    const double t33 = t11*t22*t32;
    const double t34 = t0*t7;
    const double t35 = 4*t34;
    const double t36 = t26*t35;
    const double t37 = t36*t5;
    const double t38 = pow(t22, 2);
    const double t39 = t38*t5;
    const double t40 = t11*t39;
    const double t41 = pow(t26, 2);
    const double t42 = t11*t41;
    const double t43 = t42*t5;
    const double t44 = exp(-1.0/200.0*t38 - 1.0/200.0*t41);
    const double t45 = sqrt(nu)*t44;
    const double t46 = 12*t11;
    const double t47 = 800*t11;
    const double t48 = t4*x;
    const double t49 = t2*t3;
    const double t50 = 6*t2;
    const double t51 = t11*t22;
    const double t52 = 16*t15;
    const double t53 = t12*t22;
    const double t54 = t8*y;
    const double t55 = t26*t54;
    const double t56 = 8*t48;
    const double t57 = t26*t34;
    const double t58 = 8*t49;
    const double t59 = 6*t11*t38;
    const double t60 = 400*t21;
    const double t61 = t0*t32 + t49*t52;
    const double t62 = 12*t5;
    const double t63 = 800*t5;
    const double t64 = 6*t0;
    const double t65 = t26*t5;
    const double t66 = 16*t12;
    const double t67 = t15*t26;
    const double t68 = t22*t56;
    const double t69 = t22*t58;
    const double t70 = 6*t41*t5;
    const double t71 = 4*t2;
    const double t72 = t0*t71;
    const double t73 = t34*t66 + t7*t72;
    const double t74 = pow(x, 5) - pow(y, 5);
    const double t75 = exp(-1.0/400.0*t38 - 1.0/400.0*t41);
    const double t76 = t74*t75;
    const double t77 = pow(x, 4);
    const double t78 = 5*t77;
    const double t79 = (1.0/2.0)*t74;
    const double t80 = pow(y, 4);
    const double t81 = 5*t80;
    const double t82 = -t67 + 4*y - 2;
    const double t83 = t15*t5*t82;
    const double t84 = t44*t83;
    const double t85 = t11*t44;
    const double t86 = t12*t85*(-t23 + t53 + 2);
    const double t87 = 2*t53;
    const double t88 = 2*t67;
    const double t89 = t23*t7 + t27*t3 + t27*x - t3*t88 + t31*t7 + t53*t67 - t7*t87 - t87*y - t88*x;
    const double t90 = t12*t15;
    const double t91 = t44*t90;
    const double t92 = t89*t91;
    const double t93 = t1 - 100*t11 + t16 + t18 - t29 - t36 + t42;
    const double t94 = t5*t93;
    const double t95 = t44*t94;
    const double t96 = 2*t2;
    const double t97 = t13 + t96;
    const double t98 = t85*(4*t2*t22*t3 + 100*t2*t4 + 4*t22*t4*x - t39 - 2*t4 - t97);
    const double t99 = -t89*t91;
    const double t100 = (1.0/2.0)*t76;
    const double t101 = pow(t3, 2);
    const double t102 = t101*t2;
    const double t103 = t1*t102;
    const double t104 = pow(t7, 2);
    const double t105 = t1*t104;
    const double t106 = t105*t2;
    const double t107 = t0*t104;
    const double t108 = t107*t13;
    const double t109 = t102*t16;
    const double t110 = t101*t104;
    const double t111 = t110*t96;
    const double t112 = t101*t105;
    const double t113 = 200*t107;
    const double t114 = t102*t113;
    const double t115 = -t22;
    const double t116 = t115*t32;
    const double t117 = t107*t116;
    const double t118 = -t26;
    const double t119 = t102*t118;
    const double t120 = t119*t35;
    const double t121 = t101*t23;
    const double t122 = t115*t121;
    const double t123 = t107*t122;
    const double t124 = t104*t27;
    const double t125 = t119*t124;
    const double t126 = pow(t115, 2);
    const double t127 = t102*t126;
    const double t128 = t107*t127;
    const double t129 = pow(t118, 2);
    const double t130 = t102*t107;
    const double t131 = t129*t130;
    const double t132 = exp(-1.0/100.0*t38 - 1.0/100.0*t41);
    const double t133 = t132*(t103 + t106 + t108 + t109 + t111 + t112 - t114 + t117 + t120 + t123 + t125 + t128 + t131);
    const double t134 = t133*x;
    const double t135 = 2*t12;
    const double t136 = 2*t101;
    const double t137 = t101*x;
    const double t138 = t115*t137;
    const double t139 = t107*(t135 + t136 + t138);
    const double t140 = 4*t101;
    const double t141 = t0*t140;
    const double t142 = 12*t102;
    const double t143 = t142*y;
    const double t144 = t142*t7;
    const double t145 = 800*t102;
    const double t146 = t104*y;
    const double t147 = t145*t146;
    const double t148 = t145*t34;
    const double t149 = t119*t64;
    const double t150 = 6*t104*t119;
    const double t151 = t104*t66;
    const double t152 = pow(t118, 3);
    const double t153 = t130*t152;
    const double t154 = t113*t119;
    const double t155 = t111*t126;
    const double t156 = t1*t127;
    const double t157 = t129*t146;
    const double t158 = 6*t102;
    const double t159 = t157*t158;
    const double t160 = t129*t34;
    const double t161 = t158*t160;
    const double t162 = 8*t138;
    const double t163 = t115*t58;
    const double t164 = 24*t102;
    const double t165 = t118*t15;
    const double t166 = t164*t165;
    const double t167 = t114*t26;
    const double t168 = t101*t124 + t106*t118 + t108*t118 + t112*t118 + t117*t118 + t118*t123 + t118*t128 + t124*t2 + t141*t7 + t143 + t144 + t146*t162 + t146*t163 - t147 - t148 + t149 + t150 + t151*y + t153 - t154 + t155*y + t156*t7 + t159 + t161 + t162*t34 + t163*t34 + t166 + t167 + t73;
    const double t169 = nu*t44;
    const double t170 = sigma*t44;
    const double t171 = t170*x;
    const double t172 = 12*t107;
    const double t173 = t172*x;
    const double t174 = t172*t3;
    const double t175 = 800*t107;
    const double t176 = t137*t175;
    const double t177 = t175*t49;
    const double t178 = t107*t115;
    const double t179 = t178*t50;
    const double t180 = 6*t101*t178;
    const double t181 = pow(t115, 3);
    const double t182 = t114*t115;
    const double t183 = t105*t137;
    const double t184 = t106*t129;
    const double t185 = t126*t137;
    const double t186 = 6*t107;
    const double t187 = t185*t186;
    const double t188 = t126*t49;
    const double t189 = t186*t188;
    const double t190 = 8*t118;
    const double t191 = t146*t190;
    const double t192 = t190*t34;
    const double t193 = 24*t107;
    const double t194 = t115*t12;
    const double t195 = t193*t194;
    const double t196 = t0*t121 + t103*t115 + t104*t32 + t109*t115 + t110*t23 + t111*t115 + t114*t22 + t115*t120 + t115*t125 + t115*t131 + t129*t183 + t130*t181 + t137*t191 + t137*t192 + t137*t52 + t173 + t174 - t176 - t177 + t179 + t180 - t182 + t184*t3 + t187 + t189 + t191*t49 + t192*t49 + t195 + t61;
    const double t197 = 50*t76;
    const double t198 = 100*t102;
    const double t199 = t107*(t116 + t122 + t127 + t136 - t198 + t97);
    const double t200 = t132*t196;
    const double t201 = t139*x;
    const double t202 = 24*t34;
    const double t203 = 24*y;
    const double t204 = t104*t203;
    const double t205 = 24*t7;
    const double t206 = 2400*t49;
    const double t207 = 2400*t137;
    const double t208 = 12*t115;
    const double t209 = t208*t34;
    const double t210 = 12*t118;
    const double t211 = t210*t49;
    const double t212 = 48*t194;
    const double t213 = 48*t165;
    const double t214 = t137*t210;
    const double t215 = t146*t2;
    const double t216 = 12*t188;
    const double t217 = 12*t49;
    const double t218 = t110*y;
    const double t219 = 12*t185;
    const double t220 = 12*t137;
    const double t221 = 400*t22;
    const double t222 = t102*t34;
    const double t223 = 400*t107;
    const double t224 = t223*t26;
    const double t225 = t102*t146;
    const double t226 = t107*t181;
    const double t227 = t169*(t0*t211 + t0*t214 + t101*t209 + t103*t181*t7 + t104*t211 + t104*t214 + t106*t152*t3 + t111*t181*y + t115*t143 + t115*t144 - t115*t147 - t115*t148 + t115*t149 + t115*t150 + t115*t153 - t115*t154 + t115*t159 + t115*t161 + t115*t166 + t115*t167 + t118*t173 + t118*t174 - t118*t176 - t118*t177 + t118*t179 + t118*t180 + t118*t187 + t118*t189 + t118*t195 + t119*t226 + t137*t203 + t137*t205 + t137*t213 + t137*t224 - t146*t206 - t146*t207 + t146*t212 + t146*t216 + t146*t219 + t152*t183 + t154*t22 + t157*t217 + t157*t220 + t160*t217 + t160*t220 + t2*t209 + t202*t3 + t202*x + t203*t49 + t204*t3 + t204*x + t205*t49 - t206*t34 - t207*t34 + t208*t215 + t208*t218 + t212*t34 + t213*t49 + t216*t34 + t219*t34 + t221*t222 + t221*t225 + t224*t49);
    const double t228 = 1400*t102;
    const double t229 = t102*t15;
    const double t230 = t129*t142;
    const double t231 = 48*t119;
    const double t232 = 1200*t119;
    const double t233 = t178*t49;
    const double t234 = t107*t198;
    const double t235 = 8*t152;
    const double t236 = t104*t140;
    const double t237 = 32*t15;
    const double t238 = t118*t146;
    const double t239 = 32*t12;
    const double t240 = t118*t34;
    const double t241 = t115*t49;
    const double t242 = t118*t127;
    const double t243 = t138*t238;
    const double t244 = 16*t240;
    const double t245 = t0*t162 + t0*t163 + t0*t66 + t101*t192 + t101*t52 + t104*t162 + t104*t163 + t104*t71 + t108*t129 + t112*t129 + t117*t129 + t123*t129 + t124*t242 + t127*t16 + t128*t129 + 40000*t130 + t138*t237 + t138*t244 + t141 + t151 + t155 + t156 + t184 + t190*t215 + t190*t218 + t192*t2 + t2*t52 + t236 + t237*t241 + t238*t239 + 16*t238*t241 + t239*t240 + t241*t244 + t242*t35 + 16*t243 + t72 + 64*t90;
    const double t246 = t27*t7;
    const double t247 = t115*t136*x;
    const double t248 = y*(t101*t246 + t104*t23*t3 + t104*t247 + t12*t246 + t135*t238 + t136*t238 + t15*t247 + t236 + t243);
    const double t249 = t132*t168;
    const double t250 = -1.0/4.0*t22*t26*t74*t75 - 5.0/2.0*t22*t75*t80 + (5.0/2.0)*t26*t75*t77;
    const double t251 = 1400*t107;
    const double t252 = 200*t102;
    const double t253 = t107*t12;
    const double t254 = t126*t172;
    const double t255 = 48*t178;
    const double t256 = 400*t119;
    const double t257 = 1600*t107*t22;
    o.omega = -t45*(t10 + t14 + t17 + t19 + t20 - 200*t21 - t25 - t30 - t33 - t37 + t40 + t43 + t6);
    o.omega_x = -t45*(t0*t24 + t10*t3*t41 - 24*t11*t53 - t17*t22 - t19*t22 + t20*t41*x - t21*pow(t22, 3) + t22*t30 + t22*t37 - t22*t43 - t22*t6 + t22*t60 + t24*t8 + t3*t46 + t32*t8 - 6*t4*t51 + t46*x - t47*t48 - t47*t49 + t48*t52 + t48*t59 + t49*t59 - t50*t51 - t55*t56 - t55*t58 - t56*t57 - t57*t58 + t61);
    o.omega_y = -t45*(t1*t39*t7 - t10*t26 - t14*t26 + t18*t39*y + t2*t28 - t20*t26 - t21*pow(t26, 3) + t25*t26 + t26*t33 - t26*t40 + t26*t60 + t28*t4 - t34*t63 - t34*t68 - t34*t69 + t34*t70 + t35*t4 - 24*t5*t67 - t54*t63 + t54*t66 - t54*t68 - t54*t69 + t54*t70 + t62*t7 + t62*y - t64*t65 - 6*t65*t8 + t73);
    o.p = t76;
    o.p_x = t75*(-t22*t79 + t78);
    o.p_y = -t75*(t26*t79 + t81);
    o.u[0] = t84;
    o.u[1] = t86;
    o.du[0][0] = t92;
    o.du[0][1] = t95;
    o.du[1][0] = t98;
    o.du[1][1] = t99;
    o.beta[0] = t84;
    o.beta[1] = t86;
    o.dbeta[0][0] = t92;
    o.dbeta[0][1] = t95;
    o.dbeta[1][0] = t98;
    o.dbeta[1][1] = t99;
    o.f[0] = sigma*t2*t4*t44*t7*t82*y - t100*t22 - t134*t139 - t168*t169 + 5*t75*t77;
    o.f[1] = nu*t196*t44 - t100*t26 - t133*t83 - t139*t171 - t75*t81;
    o.df[0][0] = sigma*t3*t44*t7*t89*x*y - t133*t199 - t197 - t200*t201 - t22*t75*t78 - t227 + (1.0/4.0)*t38*t74*t75 + 20*t75*pow(x, 3);
    o.df[0][1] = sigma*t2*t4*t44*t93 - t134*t248 - t169*(-t0*t228 + t0*t230 - t101*t113 + 1600*t102*t57 - t104*t228 + t104*t230 - t113*t2 + pow(t118, 4)*t130 - t12*t175 - t126*t234 + 48*t129*t229 - 500*t131 - t138*t223 - t146*t232 + t154*t26 + t164 + t222*t235 + t225*t235 + 1600*t225*t26 - 5600*t229 + t231*t7 + t231*y - t232*t34 - 400*t233 + t245) - t201*t249 - t250;
    o.df[1][0] = nu*t44*(-t0*t252 - t101*t251 + t101*t254 - t104*t252 - 1200*t107*t138 + pow(t115, 4)*t130 + 48*t126*t253 - 500*t128 - t129*t234 + 8*t137*t226 + t137*t257 - t145*t15 - t146*t256 + t182*t22 + t193 - t2*t251 + t2*t254 + t226*t58 - 1200*t233 + t245 - 5600*t253 + t255*t3 + t255*x - t256*t34 + t257*t49) - t133*t89*t90 - t170*t199 - t200*t83 - t250;
    o.df[1][1] = -t133*t94 - t171*t248 - t197 + t227 - t249*t83 + 5*t26*t75*t80 + (1.0/4.0)*t41*t74*t75 - 20*t75*pow(y, 3);
}

void eval_ex2c(double x, double y, double nu, double sigma, double p0, ExactPoint& o)
{
    (void)nu; (void)sigma; (void)p0;
    const double t0 = sqrt(nu);
    const double t1 = x - 1;
    const double t2 = pow(t1, 2);
    const double t3 = pow(y, 2);
    const double t4 = pow(x, 2);
    const double t5 = 2*x;
    const double t6 = t5 - 1;
    const double t7 = tanh(75*t6);
    const double t8 = t7 + 1;
    const double t9 = t4*t8;
    const double t10 = t3*t9;
    const double t11 = y - 1;
    const double t12 = pow(t11, 2);
    const double t13 = t12*t2;
    const double t14 = t2*t8;
    const double t15 = t12*t14;
    const double t16 = t8*x;
    const double t17 = t1*t16;
    const double t18 = 4*t17;
    const double t19 = t12*t3;
    const double t20 = t11*y;
    const double t21 = 4*t20;
    const double t22 = t2*t9;
    const double t23 = t21*t22;
    const double t24 = pow(t7, 2);
    const double t25 = t24 - 1;
    const double t26 = t25*x;
    const double t27 = 300*t26;
    const double t28 = t13*t3;
    const double t29 = t25*t4;
    const double t30 = 300*t1;
    const double t31 = t29*t30;
    const double t32 = 22500*t7;
    const double t33 = t28*t29;
    const double t34 = t16*t3;
    const double t35 = t1*t8;
    const double t36 = t35*t4;
    const double t37 = t19*t29;
    const double t38 = 75*t29;
    const double t39 = 3*t34;
    const double t40 = 3*t35;
    const double t41 = t1*t26;
    const double t42 = t2*t29;
    const double t43 = 300*t20;
    const double t44 = t16*y;
    const double t45 = t11*t44;
    const double t46 = 3375000*t24;
    const double t47 = 67500*t7;
    const double t48 = t35*y;
    const double t49 = t4*t48;
    const double t50 = 4*t11;
    const double t51 = t3*t36 + t49*t50;
    const double t52 = 4*t0;
    const double t53 = t9*y;
    const double t54 = t11*t3;
    const double t55 = 3*t2;
    const double t56 = t11*t9;
    const double t57 = t13*y;
    const double t58 = 4*t1;
    const double t59 = t32*t42;
    const double t60 = t11*t16;
    const double t61 = t3*t60;
    const double t62 = t10*t11 + t58*t61;
    const double t63 = exp(-pow(x - 1.0/2.0, 2));
    const double t64 = t6*t63;
    const double t65 = 2*y;
    const double t66 = t65 - 1;
    const double t67 = t2*t56*t65*t66;
    const double t68 = t1*t19*t5*(75*t1*t25*x - t16 - t35);
    const double t69 = t11*t35;
    const double t70 = 75*t41;
    const double t71 = -t11*t70 + t44 + t48 + t60 + t69 - t70*y;
    const double t72 = t1*t21*x;
    const double t73 = t71*t72;
    const double t74 = t12 + t21 + t3;
    const double t75 = t22*t74;
    const double t76 = 2*t75;
    const double t77 = t18 + t9;
    const double t78 = 2*t19*(300*t1*t25*t4 - t14 + 300*t2*t25*x - t59 - t77);
    const double t79 = -t71*t72;
    const double t80 = pow(t1, 2);
    const double t81 = t8*t80;
    const double t82 = -t25;
    const double t83 = t80*t82;
    const double t84 = t83*x;
    const double t85 = 75*t84;
    const double t86 = x*(t17 + t81 + t85);
    const double t87 = pow(t11, 2);
    const double t88 = t3*t87;
    const double t89 = t80*t9;
    const double t90 = t87*t9;
    const double t91 = t3*t81;
    const double t92 = t4*t82;
    const double t93 = t30*t92;
    const double t94 = 300*t84;
    const double t95 = t4*t83;
    const double t96 = t32*t95;
    const double t97 = t10*t80 + t10*t87 + t18*t88 + t21*t89 + t80*t90 + t87*t91 + t88*t93 + t88*t94 - t88*t96;
    const double t98 = 4*t97;
    const double t99 = t88*t98;
    const double t100 = t81*t87;
    const double t101 = t44*t87;
    const double t102 = t87*y;
    const double t103 = t100*y + t101*t58 + t102*t93 + t102*t94 - t102*t96 + 3*t11*t89 + t11*t91 + 3*t53*t80 + t54*t93 + t54*t94 - t54*t96 + t62 + t90*y;
    const double t104 = 4*t103;
    const double t105 = sigma*t88;
    const double t106 = t80*t87;
    const double t107 = 75*t83;
    const double t108 = t3*t4;
    const double t109 = t107*t4;
    const double t110 = 225*t88;
    const double t111 = pow(t82, 2);
    const double t112 = t106*t111;
    const double t113 = t108*t112;
    const double t114 = t44*t80;
    const double t115 = t82*x;
    const double t116 = t1*t88;
    const double t117 = t115*t116;
    const double t118 = t7*t88;
    const double t119 = t116*t92;
    const double t120 = t88*t95;
    const double t121 = t106*t16 + t107*t108 + t109*t87 + t110*t83 + t110*t92 - 1687500*t113 + t114*t50 + 900*t117 - 67500*t118*t84 - t119*t47 + t120*t46 + t34*t80 + t36*t87 + t39*t87 + t40*t88 + t43*t95 + t51;
    const double t122 = t77 + t81 + t93 + t94 - t96;
    const double t123 = t86*t88;
    const double t124 = 75*t92;
    const double t125 = x*y;
    const double t126 = 562500*t4;
    const double t127 = t1*t92;
    const double t128 = t127*t32;
    const double t129 = t32*t84;
    const double t130 = 1125000*t24*t95;
    const double t131 = t101 + t102*t107 + t102*t124 - t102*t128 - t102*t129 + t102*t130 + t107*t54 + t109*t11 + t109*y - t111*t126*t54*t80 - t112*t126*y + t114 + t115*t30*t54 + t124*t54 + t125*t30*t82*t87 - t128*t54 - t129*t54 + t130*t54 + t3*t69 + t4*t69 + t48*t87 + t49 + t60*t80 + t61;
    const double t132 = t1*t45;
    const double t133 = t125*(t100 + t132 + t17*t87 + t20*t81 + t20*t85 + t85*t87);
    const double t134 = 1200*t20;
    const double t135 = t10 + t100 - t108*t32*t83 + t127*t134 + 16*t132 + t134*t84 + t18*t3 + t18*t87 - 90000*t20*t7*t95 + t21*t81 + t21*t9 + t3*t93 + t3*t94 + t87*t93 + t87*t94 - t87*t96 + t90 + t91;
    const double t136 = 1800*t88;
    const double t137 = 135000*t118;
    const double t138 = 27000000*t24;
    o.omega = -2*t0*(t10*t12 + t10*t2 + t13*t9 + t15*t3 + t18*t19 - t19*t31 + t23 - t27*t28 + t32*t33);
    o.omega_x = -t52*(t1*t37*t47 + t12*t36 + t12*t39 + t13*t16 - t13*t38 + t19*t40 - 900*t19*t41 - t2*t3*t38 + t2*t34 + 4*t2*t45 - 1687500*pow(t25, 2)*t28*t4 - 225*t25*t28 + t26*t28*t47 - t33*t46 - 225*t37 - t42*t43 + t51);
    o.omega_y = -t52*(-t12*t31*y + t12*t44*t58 + t12*t53 + t14*t54 + t15*y - t2*t27*t54 - t27*t57 + t29*t32*t57 - t31*t54 + t53*t55 + t54*t59 + t55*t56 + t62);
    o.p = -p0 + t63;
    o.p_x = -t64;
    o.p_y = 0;
    o.u[0] = t67;
    o.u[1] = t68;
    o.du[0][0] = t73;
    o.du[0][1] = t76;
    o.du[1][0] = t78;
    o.du[1][1] = t79;
    o.beta[0] = t67;
    o.beta[1] = t68;
    o.dbeta[0][0] = t73;
    o.dbeta[0][1] = t76;
    o.dbeta[1][0] = t78;
    o.dbeta[1][1] = t79;
    o.f[0] = -nu*t104 + 2*sigma*t11*t2*t4*t66*t8*y - t64 - t86*t99;
    o.f[1] = 4*nu*t121 - 2*t105*t86 - 2*t67*t97;
    o.df[0][0] = -24*nu*t131 + 4*sigma*t1*t11*t71*x*y - 8*t121*t123 - t122*t99 + pow(t6, 2)*t63 - 2*t63;
    o.df[0][1] = -4*nu*(t135 + 6*t89) + 2*sigma*t2*t4*t74*t8 - 2*t104*t123 - 2*t133*t98;
    o.df[1][0] = 4*nu*(t1*t136*t82 - 13500000*t111*t116*t4 - 13500000*t112*t3*x + 2025000000*t113*t7 + t115*t136 - 540000*t117*t7 + t119*t138 - 1012500000*t120*pow(t7, 3) + t135 - t137*t83 - t137*t92 + t138*t84*t88 + 6*t8*t88) - 2*t105*t122 - 2*t121*t23*t66 - 2*t73*t97;
    o.df[1][1] = 24*nu*t131 - 4*sigma*t133 - 4*t103*t67 - 4*t75*t97;
}

} // namespace oseenvb::detail
