// Reference values for K_n(x), generated offline with an extended-precision
// evaluation of the integral representation (50 decimal digits, rounded to
// nearest f64-representable 17-digit decimal).

/// (order n, argument x, K_n(x)) reference triples.
pub const BESSEL_K_FIXTURES: &[(u32, f64, f64)] = &[
    (0, 1e-06, 13.931442073626419),
    (0, 4.381076470077285e-06, 12.454147610071211),
    (0, 1.9193831036664845e-05, 10.976853147493694),
    (0, 8.408964152537145e-05, 9.4995587013353544),
    (0, 0.00036840314986403866, 8.0222645252859610),
    (0, 0.0016140023713716956, 6.5449746692118116),
    (0, 0.007071067811865475, 5.0677511381241757),
    (0, 0.03097888880888471, 3.5914822389920668),
    (0, 0.13572088082974532, 2.1274414158124320),
    (0, 0.5946035575013605, 0.78459596361667464),
    (0, 2.6050036547934567, 0.055072650070212595),
    (0, 11.412720216480944, 4.0580634543821089e-6),
    (0, 50.0, 3.4101677497894955e-23),
    (1, 1e-06, 999999.99999278432),
    (1, 4.381076470077285e-06, 228254.40430124232),
    (1, 1.9193831036664845e-05, 52100.072985726741),
    (1, 8.408964152537145e-05, 11892.070729597558),
    (1, 0.00036840314986403866, 2714.4160467803864),
    (1, 0.0016140023713716956, 619.57209087669995),
    (1, 0.007071067811865475, 141.40167139293514),
    (1, 0.03097888880888471, 32.216680706523746),
    (1, 0.13572088082974532, 7.1902118700196677),
    (1, 0.5946035575013605, 1.3188930754937488),
    (1, 2.6050036547934567, 0.064882535645443193),
    (1, 11.412720216480944, 4.2322573385332952e-6),
    (1, 50.0, 3.4441022267175556e-23),
    (2, 1e-06, 1999999999999.5002),
    (2, 4.381076470077285e-06, 104200146191.23828),
    (2, 1.9193831036664845e-05, 5428835232.6898129),
    (2, 8.408964152537145e-05, 282842711.97461902),
    (2, 0.00036840314986403866, 14736125.494561695),
    (2, 0.0016140023713716956, 767752.74146896919),
    (2, 0.007071067811865475, 39999.500036360638),
    (2, 0.03097888880888471, 2083.5034445611551),
    (2, 0.13572088082974532, 108.08330946001425),
    (2, 0.5946035575013605, 5.2208058007592352),
    (2, 2.6050036547934567, 0.10488642712657342),
    (2, 11.412720216480944, 4.7997371760285143e-6),
    (2, 50.0, 3.5479318388581977e-23),
    (3, 1e-06, 7.9999999999990011e+18),
    (3, 4.381076470077285e-06, 95136569199989447.),
    (3, 1.9193831036664845e-05, 1131370849846375.9),
    (3, 8.408964152537145e-05, 13454342632167.361),
    (3, 0.00036840314986403866, 159999997285.58243),
    (3, 0.0016140023713716956, 1902730764.4267792),
    (3, 0.007071067811865475, 22627275.577497122),
    (3, 0.03097888880888471, 269054.57670333055),
    (3, 0.13572088082974532, 3192.6487440939319),
    (3, 0.5946035575013605, 36.440148136247666),
    (3, 2.6050036547934567, 0.22593632446999601),
    (3, 11.412720216480944, 5.9144985868895928e-6),
    (3, 50.0, 3.7279367738262114e-23),
    (4, 1e-06, 4.7999999999996009e+25),
    (4, 4.381076470077285e-06, 1.3029204559634714e+23),
    (4, 1.9193831036664845e-05, 3.5366702385861942e+20),
    (4, 8.408964152537145e-05, 9.5999999943431456e+17),
    (4, 0.00036840314986403866, 2605840882458858.5),
    (4, 0.0016140023713716956, 7073338941883.3089),
    (4, 0.007071067811865475, 19199920000.249998),
    (4, 0.03097888880888471, 52112650.482754552),
    (4, 0.13572088082974532, 141249.90575750062),
    (4, 0.5946035575013605, 372.92948506977912),
    (4, 2.6050036547934567, 0.62527646355723598),
    (4, 11.412720216480944, 7.9091616469877960e-6),
    (4, 50.0, 3.9952842517173431e-23),
    (5, 1e-06, 3.8399999999997609e+32),
    (5, 4.381076470077285e-06, 2.3791786605194922e+29),
    (5, 1.9193831036664845e-05, 1.4740862235819188e+26),
    (5, 8.408964152537145e-05, 9.1331106391845948e+22),
    (5, 0.00036840314986403866, 5.6586723339116340e+19),
    (5, 0.0016140023713716956, 35059870796835923.),
    (5, 0.007071067811865475, 21722252435941.166),
    (5, 0.03097888880888471, 13457859687.797532),
    (5, 0.13572088082974532, 8329098.2805939887),
    (5, 0.5946035575013605, 5053.9612223377026),
    (5, 2.6050036547934567, 2.1461684513053416),
    (5, 11.412720216480944, 1.1458601305234543e-5),
    (5, 50.0, 4.3671822541009863e-23),
    (6, 1e-06, 3.8399999999998090e+39),
    (6, 4.381076470077285e-06, 5.4305800795074751e+35),
    (6, 1.9193831036664845e-05, 7.6799999998585323e+31),
    (6, 8.408964152537145e-05, 1.0861160155185370e+28),
    (6, 0.00036840314986403866, 1.5359999895766364e+24),
    (6, 0.0016140023713716956, 2.1722317488714777e+20),
    (6, 0.007071067811865475, 30719923200119997.),
    (6, 0.03097888880888471, 4344255602589.0353),
    (6, 0.13572088082974532, 613834458.32535235),
    (6, 0.5946035575013605, 85370.086978970891),
    (6, 2.6050036547934567, 8.8639153896723133),
    (6, 11.412720216480944, 1.7949363358659780e-5),
    (6, 50.0, 4.8687207025375404e-23),
    (8, 1e-06, 6.4511999999997719e+53),
    (8, 4.381076470077285e-06, 4.7532848008025162e+48),
    (8, 1.9193831036664845e-05, 3.5022501855893317e+43),
    (8, 8.408964152537145e-05, 2.5804799993483303e+38),
    (8, 0.00036840314986403866, 1.9013139111063089e+33),
    (8, 0.0016140023713716956, 1.4008999439202499e+28),
    (8, 0.007071067811865475, 1.0321901568019199e+23),
    (8, 0.03097888880888471, 7.6049950186570170e+17),
    (8, 0.13572088082974532, 5599915311250.5773),
    (8, 0.5946035575013605, 40770161.809218586),
    (8, 2.6050036547934567, 239.83923018497185),
    (8, 11.412720216480944, 5.5157191348466783e-5),
    (8, 50.0, 6.4187097648963393e-23),
    (10, 1e-06, 1.8579455999999492e+68),
    (10, 4.381076470077285e-06, 7.1322187843391787e+61),
    (10, 1.9193831036664845e-05, 2.7378920452361064e+55),
    (10, 8.408964152537145e-05, 1.0510127460621286e+49),
    (10, 0.00036840314986403866, 4.0345921986414834e+42),
    (10, 0.0016140023713716956, 1.5487855130183733e+36),
    (10, 0.007071067811865475, 5.9454176624704503e+29),
    (10, 0.03097888880888471, 2.2822491698566292e+23),
    (10, 0.13572088082974532, 87567729545647150.),
    (10, 0.5946035575013605, 33303923463.685509),
    (10, 2.6050036547934567, 10715.594701664496),
    (10, 11.412720216480944, 0.00022495551118553968),
    (10, 50.0, 9.1509882099879961e-23),
    (12, 1e-06, 8.1749606399998186e+82),
    (12, 4.381076470077285e-06, 1.6349921279992879e+75),
    (12, 1.9193831036664845e-05, 3.2699842559726203e+67),
    (12, 8.408964152537145e-05, 6.5399685109489870e+59),
    (12, 0.00036840314986403866, 1.3079936983654077e+52),
    (12, 0.0016140023713716956, 2.6159872499214421e+44),
    (12, 0.007071067811865475, 5.2319688641777950e+36),
    (12, 0.03097888880888471, 1.0463721390936767e+29),
    (12, 0.13572088082974532, 2.0919140000807270e+21),
    (12, 0.5946035575013605, 41520955902080.466),
    (12, 2.6050036547934567, 718307.25180716303),
    (12, 11.412720216480944, 0.0011924122117396863),
    (12, 50.0, 1.4101013567835686e-22),
    (16, 1e-06, 4.2849873690623317e+112),
    (16, 4.381076470077285e-06, 2.3262490402931858e+102),
    (16, 1.9193831036664845e-05, 1.2628822751044119e+92),
    (16, 8.408964152537145e-05, 6.8559797896918547e+81),
    (16, 0.00036840314986403866, 3.7219984560510691e+71),
    (16, 0.0016140023713716956, 2.0206115524511228e+61),
    (16, 0.007071067811865475, 1.0969558523497435e+51),
    (16, 0.03097888880888471, 5.9551022914224427e+40),
    (16, 0.13572088082974532, 3.2319862545816333e+30),
    (16, 0.5946035575013605, 1.7448211924588858e+20),
    (16, 2.6050036547934567, 8513208598.3784590),
    (16, 11.412720216480944, 0.067863923390592038),
    (16, 50.0, 4.2167923600791080e-22),
    (24, 1e-06, 2.1686243443194230e+173),
    (24, 4.381076470077285e-06, 8.6744973772759790e+157),
    (24, 1.9193831036664845e-05, 3.4697989508972148e+142),
    (24, 8.408964152537145e-05, 1.3879195802577695e+127),
    (24, 0.00036840314986403866, 5.5516783132677911e+111),
    (24, 0.0016140023713716956, 2.2206712657042314e+96),
    (24, 0.007071067811865475, 8.8826804867874456e+80),
    (24, 0.03097888880888471, 3.5530370622913640e+65),
    (24, 0.13572088082974532, 1.4209451227467785e+50),
    (24, 0.5946035575013605, 5.6631154455108810e+34),
    (24, 2.6050036547934567, 2.1125332224113264e+19),
    (24, 11.412720216480944, 2302.4675903858607),
    (24, 50.0, 9.2723347453427547e-21),
    (32, 1e-06, 1.7658411549989299e+235),
    (32, 4.381076470077285e-06, 5.2043315492885015e+214),
    (32, 1.9193831036664845e-05, 1.5338337085514177e+194),
    (32, 8.408964152537145e-05, 4.5205533565395067e+173),
    (32, 0.00036840314986403866, 1.3323088751598170e+153),
    (32, 0.0016140023713716956, 3.9266142114126147e+132),
    (32, 0.007071067811865475, 1.1572611927024372e+112),
    (32, 0.03097888880888471, 3.4106843272294987e+91),
    (32, 0.13572088082974532, 1.0050639466142859e+71),
    (32, 0.5946035575013605, 2.9541552331000068e+50),
    (32, 2.6050036547934567, 8.2668337888031671e+29),
    (32, 11.412720216480944, 916091119.33212874),
    (32, 50.0, 6.4170204441125585e-19),
    (48, 5.152400386093446e-05, 2.4244674065113273e+279),
    (48, 0.00016252604637263243, 2.7338504209932975e+255),
    (48, 0.0005126681501851747, 3.0827133810248786e+231),
    (48, 0.0016171477623450408, 3.4760942331073760e+207),
    (48, 0.005101090996803643, 3.9196734404987218e+183),
    (48, 0.016090755565797962, 4.4198522048556370e+159),
    (48, 0.05075628230127501, 4.9838021510619044e+135),
    (48, 0.16010436442913958, 5.6190892270091272e+111),
    (48, 0.5050292564200436, 6.3284063199757605e+87),
    (48, 1.5930518243496508, 7.0498561488722319e+63),
    (48, 5.025083364582341, 7.0461574416109231e+39),
    (48, 15.850998966283388, 2432526884033985.2),
    (48, 50.0, 7.1423238751811049e-14),
    (64, 0.001972246065932776, 2.4244673691225952e+279),
    (64, 0.004591576670518187, 7.8807729535172519e+255),
    (64, 0.010689627772828562, 2.5616580535212850e+232),
    (64, 0.02488647149362136, 8.3266975161417446e+208),
    (64, 0.05793807572767776, 2.7065781562154851e+185),
    (64, 0.1348853580904994, 8.7972615480994307e+161),
    (64, 0.3140259595903479, 2.8586528222655231e+138),
    (64, 0.7310823405345175, 9.2760431175308623e+114),
    (64, 1.702029314196406, 2.9870626432370566e+91),
    (64, 3.9624863380858986, 9.2287519395429289e+67),
    (64, 9.22504556681539, 2.2796847464596919e+44),
    (64, 21.476784636922947, 1.7079114182319725e+20),
    (64, 50.0, 3.2099837702195320e-7),
    (7, 0.05, 58976256383979.978),
    (7, 0.3, 209911239.47125662),
    (7, 1.7, 996.96480470526363),
    (7, 9.0, 0.00061702337189482730),
    (7, 33.0, 2.0992686306726432e-15),
];
