
def step_57(cfg):
    v0_s57 = {}
    for v1_s57 in v2_s57:
        if v1_s57 in v0_s57:
            v0_s57[v1_s57] = v0_s57[v1_s57] + [v3_s57(v1_s57)]
        else:
            v0_s57[v1_s57] = [v3_s57(v1_s57)]
    return cfg

def step_8(cfg):
    v0_s8 = {}
    for v1_s8 in v2_s8:
        if v1_s8 in v0_s8:
            v0_s8[v1_s8].append(v3_s8(v1_s8))
        else:
            v0_s8[v1_s8] = [v3_s8(v1_s8)]
    return cfg

def step_88(cfg):
    v0_s88 = {}
    for v1_s88 in v2_s88:
        if v1_s88 in v0_s88.keys():
            v0_s88[v1_s88].append(v3_s88(v1_s88))
        else:
            v0_s88[v1_s88] = [v3_s88(v1_s88)]
    return cfg

def step_39(cfg):
    v0_s39 = {}
    for v1_s39 in v2_s39:
        v3_s39 = v4_s39(v1_s39)
        if v1_s39 in v0_s39:
            v0_s39[v1_s39].append(v3_s39)
        else:
            v0_s39[v1_s39] = [v3_s39]
    return cfg

def step_119(cfg):
    v0_s119 = {}
    for v1_s119 in v2_s119:
        v3_s119 = v4_s119(v1_s119)
        if v1_s119 in v0_s119:
            v0_s119[v1_s119].append(v3_s119)
        else:
            v0_s119[v1_s119] = [v3_s119]
    return cfg

def step_70(cfg):
    v0_s70 = {}
    for v1_s70 in range(len(v2_s70)):
        if v2_s70[v1_s70] in v0_s70:
            v0_s70[v2_s70[v1_s70]].append(v3_s70(v2_s70[v1_s70]))
        else:
            v0_s70[v2_s70[v1_s70]] = [v3_s70(v2_s70[v1_s70])]
    return cfg

def step_21(cfg):
    v0_s21 = {}
    for v1_s21 in v2_s21:
        if v1_s21 not in v0_s21:
            v0_s21[v1_s21] = []
        v0_s21[v1_s21].append(v3_s21(v1_s21))
    return cfg

def step_101(cfg):
    v0_s101 = {}
    for v1_s101 in v2_s101:
        if v1_s101 not in v0_s101:
            v0_s101[v1_s101] = []
        v0_s101[v1_s101].append(v3_s101(v1_s101))
    return cfg

def step_52(cfg):
    v0_s52 = {}
    for v1_s52 in v2_s52:
        if v1_s52 in v0_s52:
            v0_s52[v1_s52] = v0_s52[v1_s52] + [v3_s52(v1_s52)]
        else:
            v0_s52[v1_s52] = [v3_s52(v1_s52)]
    return cfg

def step_3(cfg):
    v0_s3 = {}
    for v1_s3 in v2_s3:
        if v1_s3 in v0_s3:
            v0_s3[v1_s3].append(v3_s3(v1_s3))
        else:
            v0_s3[v1_s3] = [v3_s3(v1_s3)]
    return cfg

def step_83(cfg):
    v0_s83 = {}
    for v1_s83 in v2_s83:
        if v1_s83 in v0_s83.keys():
            v0_s83[v1_s83].append(v3_s83(v1_s83))
        else:
            v0_s83[v1_s83] = [v3_s83(v1_s83)]
    return cfg

def step_34(cfg):
    v0_s34 = {}
    for v1_s34 in v2_s34:
        v3_s34 = v4_s34(v1_s34)
        if v1_s34 in v0_s34:
            v0_s34[v1_s34].append(v3_s34)
        else:
            v0_s34[v1_s34] = [v3_s34]
    return cfg
