// Embedded graph6 for the three large named graphs. Each loader re-verifies
// the strongly-regular parameters, which determine these graphs uniquely.

namespace booksat::named_data {

extern const char* const gewirtz_g6;
extern const char* const m22_g6;
extern const char* const higman_sims_g6;

// (56, 10, 0, 2): one class of 56 hyperovals of PG(2,4), adjacent when disjoint.
const char* const gewirtz_g6 =
    "w????????????????????CCeACaGQ@R?A?`OCQG@GK?HQ???TO??i_?K?E?Cw???GCW?T@CO@SOS"
    "?D?l??D?DA_c?A_SE?@_W@G?WE?B??@EDO??AHI_??I?Wg??DE?S???OGg?cEcaGOAOd_oI?B@Kc"
    "I_?B?r?CcOSI?oAEGI@OKD?E?gIE?IW?D@OW?@_YO@b??AOd_AR??W@`G@M??@`_K?L_???YRBK?"
    "???AUBoo???C_@e]????BW?Xe?????";

// (77, 16, 0, 4): the 77 blocks of S(3,6,22), adjacent when disjoint.
const char* const m22_g6 =
    "~?@L????????????????????????????????????WTGoBK??xggaP?@RW?DcH?AeAO?QAs?AHP@?"
    "??qT?@_i_??Ar_??W?WW?E@IC??Q_WC??@_So??EX_?_cd@_YAC_ESBPAOKg?hR??oIgOCI?B@UC"
    "QGCaOcH@_A_aPHQ??LO@OAi??HSK?i_?KN?@_?o?SC_sw???IoK@?b?AsG`D@CO@SSCSaA_?g?@k"
    "gl??D?BSE?gSC_@OcHA_SE?AY?DKB?H?@eE?WE?B??oOh?Goi??B??{AHI_???iR@OBD???hCGdE"
    "?S????jEA@D?C_spDCCaGOAOd_o?rE@O?WHcc`GSI_?B?r@OKC_caA`OEAT?IAEGI@OK?{o?g?oD"
    "@Oo?Cs@iW?D@OW??ELOKBQ?KW?C`_WAOd_AR??W`@J?KH?Ho??TGK@`_K?L_??@_JGBQWX_???P_"
    "a_AUBoo???AOhOc?Kro????ocCJW?Xe?????";

// (100, 22, 0, 6): a star vertex over the 22 points plus the 77 blocks of
// S(3,6,22); point-block incidence edges, blocks adjacent when disjoint.
const char* const higman_sims_g6 =
    "~?@csaCCA?_C?O?_?_?O?C??_?A??C??C??A???_??C???CPCPO{?AC`AE?oID?SCIO^??A?`CPG"
    "@?aGo@@CPO@?N?G?CQ@I??GoQO?@DAB??O??}??AOQa??AAQP???HGKO??O?NA???DA_W???Oh@O"
    "???`BAO???NK??BAhKN??K?r@eE???[s@eW?gaP??hk?Aeo??U[?UOc?B@T?SoQ?@GJOC_l??DWE"
    "@Cg__?iOW??qT?@R@GB@T???k`G?JM???cISB?BB??E@T@_Q`???AkWHOKA???TH_@_So??SPG_K"
    "r?@@HWGS_SE@gGQGoPO?q_YGQAOoKBI?ISo?WCgOWDSGAD@QGP?B@UCQGAPGQHC`GQB?AIAIIAHC"
    "dG??@iB@i?I?TO??dOoATB?Ig??W@eEF_?o?W?E?@wSC_sw???PIGGT_WA@E?DQOcHOaCSCP?DIA"
    "HCa_acOS?DBCGH??ZIJO?@OEg?g@iB?SIAO?dOA`OcHA_SE???WtCs?IWE?Q???FLEWW@_W?K??S"
    "E@eADG@EDO??IAOWo?N?aQg???E@R?TH_g@a_???EAkhCGdE?S???Q_WC@UKCAI?H@hPDCDCSOQG"
    "`?HAUKH@AE?EWoI?B@Ka`CGhGQDAg??oKoI@_cgEAOQP@OgB?SHAQT?IAEGI@OK?@`S`x_@O@_IA"
    "`_?E?k_ROEh_?SD@_?e_@O?pi@_YO@b??ES?TGWE?cHW?co???EqkO_d_EC_Cw???@ciTGK@`_K?"
    "L_???e_KB?UOEcor?????XOLEAI?HWNB????E?EEQDIC_@e]?????W?XkH@Au?EX_????";

}  // namespace booksat::named_data
