
def step_84(cfg):
    v0_s84 = {}
    for v1_s84 in v2_s84:
        v3_s84 = v4_s84(v1_s84)
        if v1_s84 in v0_s84:
            v0_s84[v1_s84].append(v3_s84)
        else:
            v0_s84[v1_s84] = [v3_s84]
    return cfg

def step_35(cfg):
    v0_s35 = {}
    for v1_s35 in range(len(v2_s35)):
        if v2_s35[v1_s35] in v0_s35:
            v0_s35[v2_s35[v1_s35]].append(v3_s35(v2_s35[v1_s35]))
        else:
            v0_s35[v2_s35[v1_s35]] = [v3_s35(v2_s35[v1_s35])]
    return cfg

def step_115(cfg):
    v0_s115 = {}
    for v1_s115 in range(len(v2_s115)):
        if v2_s115[v1_s115] in v0_s115:
            v0_s115[v2_s115[v1_s115]].append(v3_s115(v2_s115[v1_s115]))
        else:
            v0_s115[v2_s115[v1_s115]] = [v3_s115(v2_s115[v1_s115])]
    return cfg

def step_66(cfg):
    v0_s66 = {}
    for v1_s66 in v2_s66:
        if v1_s66 not in v0_s66:
            v0_s66[v1_s66] = []
        v0_s66[v1_s66].append(v3_s66(v1_s66))
    return cfg

def step_17(cfg):
    v0_s17 = {}
    for v1_s17 in v2_s17:
        if v1_s17 in v0_s17:
            v0_s17[v1_s17] = v0_s17[v1_s17] + [v3_s17(v1_s17)]
        else:
            v0_s17[v1_s17] = [v3_s17(v1_s17)]
    return cfg

def step_97(cfg):
    v0_s97 = {}
    for v1_s97 in v2_s97:
        if v1_s97 in v0_s97:
            v0_s97[v1_s97] = v0_s97[v1_s97] + [v3_s97(v1_s97)]
        else:
            v0_s97[v1_s97] = [v3_s97(v1_s97)]
    return cfg

def step_48(cfg):
    v0_s48 = {}
    for v1_s48 in v2_s48:
        if v1_s48 in v0_s48.keys():
            v0_s48[v1_s48].append(v3_s48(v1_s48))
        else:
            v0_s48[v1_s48] = [v3_s48(v1_s48)]
    return cfg

def step_128(cfg):
    v0_s128 = {}
    for v1_s128 in v2_s128:
        if v1_s128 in v0_s128:
            v0_s128[v1_s128].append(v3_s128(v1_s128))
        else:
            v0_s128[v1_s128] = [v3_s128(v1_s128)]
    return cfg

def step_79(cfg):
    v0_s79 = {}
    for v1_s79 in v2_s79:
        v3_s79 = v4_s79(v1_s79)
        if v1_s79 in v0_s79:
            v0_s79[v1_s79].append(v3_s79)
        else:
            v0_s79[v1_s79] = [v3_s79]
    return cfg

def step_30(cfg):
    v0_s30 = {}
    for v1_s30 in range(len(v2_s30)):
        if v2_s30[v1_s30] in v0_s30:
            v0_s30[v2_s30[v1_s30]].append(v3_s30(v2_s30[v1_s30]))
        else:
            v0_s30[v2_s30[v1_s30]] = [v3_s30(v2_s30[v1_s30])]
    return cfg

def step_110(cfg):
    v0_s110 = {}
    for v1_s110 in range(len(v2_s110)):
        if v2_s110[v1_s110] in v0_s110:
            v0_s110[v2_s110[v1_s110]].append(v3_s110(v2_s110[v1_s110]))
        else:
            v0_s110[v2_s110[v1_s110]] = [v3_s110(v2_s110[v1_s110])]
    return cfg

def step_61(cfg):
    v0_s61 = {}
    for v1_s61 in v2_s61:
        if v1_s61 not in v0_s61:
            v0_s61[v1_s61] = []
        v0_s61[v1_s61].append(v3_s61(v1_s61))
    return cfg
